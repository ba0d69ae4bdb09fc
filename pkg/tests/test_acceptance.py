"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""
import pytest

from affine_cactus import checks

CRITERIA = [
    (1, "relation soundness, n = 2..6", checks.check_relations),
    (2, "injectivity evidence on 500 random pairs", checks.check_injectivity),
    (3, "word problem consistency", checks.check_word_problem),
    (4, "torsion orders 2, 4, 8", checks.check_torsion_orders),
    (5, "PAJ_2 is infinite cyclic up to m = 16", checks.check_paj2),
    (6, "no odd torsion on 200 random words", checks.check_no_odd_torsion),
    (7, "reduced decreasing words in AJ_4 are not pure", checks.check_decreasing),
    (8, "trivial center of AJ_3 up to length 3", checks.check_center),
    (9, "cycle cactus isomorphism certificate, n = 3..6", checks.check_iso),
    (10, "J_n embeds in AJ_n on 300 pairs", checks.check_classic_embedding),
    (11, "splitting for p in {3, n}", checks.check_split),
    (12, "action well-definedness", checks.check_action),
    (13, "finite orders at most 2^(n-1)", checks.check_torsion_bound),
]


def evaluate(number, label, check):
    result = check()
    status = "PASS" if result.ok else "FAIL"
    line = f"{status} {number}: {label} ({result.detail})"
    if result.witness is not None:
        line += f" [witness: {result.witness}]"
    return result, line


@pytest.mark.parametrize("number,label,check", CRITERIA, ids=[f"criterion{c[0]}" for c in CRITERIA])
def test_criterion(number, label, check, acceptance_report):
    result, line = evaluate(number, label, check)
    acceptance_report.append(line)
    print(line)
    assert result.ok, line


if __name__ == "__main__":
    for row in CRITERIA:
        print(evaluate(*row)[1])
