"""Smoke tests for the compiled module.

When run from the build tree (via ctest) the extension directory is passed
through DDQ_MODULE_DIR; an installed `ddq` package works too.
"""

import os
import sys

module_dir = os.environ.get("DDQ_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)
    import _ddq as ddq
else:
    import ddq


def test_algebra_and_quiver():
    assert ddq.Algebra([2, 3]).dim() == 13
    arrows = ddq.quiver_arrows([1, 1, 1])
    assert len(arrows) == 6
    assert all(a["tail"] != a["head"] for a in arrows)
    assert ddq.derivation_dimension([2]) == 12  # 4*4 - 4


def test_check_tensor_and_moment_map():
    assert ddq.check_tensor([1, 1, 1], "1,2:1 2,3:1 1,3:1/2")["poisson"]
    assert not ddq.check_tensor([1, 1, 1], "1,2:1 2,3:1 1,3:1")["poisson"]
    result = ddq.moment_map([1, 1], "1,2:5")
    assert result["status"] == "ok"
    assert result["mu"][2] == "-1/5"


def test_necklace_bracket_degree():
    terms = ddq.necklace_bracket(
        [1, 1, 1],
        [(1, 2, 1, 1), (2, 1, 1, 1)],
        [(1, 3, 1, 1), (3, 1, 1, 1)],
    )
    for term in terms:
        assert len(term["word"]) == 3


def test_betti_numbers():
    assert ddq.betti_numbers([1, 1], "1,2:1", 4) == [0, 0, 1, 0, 1]


def test_free_product_bracket_vanishes_for_two_idempotents():
    terms = ddq.free_product_bracket(2, 2, [1, 1], [2, 2], "1,2:1", "1,2:1")
    # The induced bracket on traces may be a nonzero formal sum; evaluation
    # vanishes, which the native suite checks. Here: the call simply works.
    assert isinstance(terms, list)
