import pytest

try:
    import bitadder as ba
except ImportError:  # running against the bare build tree
    import _bitadder as ba


def bits(value, width):
    return [(value >> i) & 1 for i in range(width)]


def test_golden_sizes():
    assert ba.generate_sum(5, "dadda").size() == 12
    assert ba.generate_sum(5, "mdfa").size() == 11
    assert ba.generate_sum(16, "dadda").size() == 63
    assert ba.generate_sum(16, "mdfa").size() == 59
    assert ba.generate_add_bit(7).size() == 14
    for n in (2, 9, 40):
        assert ba.generate_add(n, "mdfa").size() == 5 * n - 3


def test_ba_weights_and_verify():
    c = ba.generate_ba([0, 0, 0, 0, 0], "mdfa")
    assert c.size() == 11
    rep = ba.verify_exhaustive(c, [0, 0, 0, 0, 0])
    assert rep["ok"] and rep["cases_checked"] == 32


def test_evaluate_and_weighted_value():
    c = ba.generate_sum(10, "mdfa")
    assert c.weighted_output_value([1] * 10) == 10
    assert c.weighted_output_value(bits(0b1011001, 10)) == 4


def test_multiplier_matches_python_ints():
    c = ba.generate_mult(4, "karatsuba", base="mdfa", threshold=2)
    for x in range(16):
        for y in range(16):
            assert c.weighted_output_value(bits(x, 4) + bits(y, 4)) == x * y
    rep = ba.verify_mult_exhaustive(c, 4)
    assert rep["ok"]


def test_logdepth_and_depth():
    c = ba.generate_sum(64, "logdepth")
    assert c.depth() <= 24  # 4 * ceil(log2 64)
    rep = ba.verify_random(c, [0] * 64, 5000, seed=9)
    assert rep["ok"]


def test_json_roundtrip():
    c = ba.generate_mult(5, "dadda")
    back = ba.parse_json(c.to_json())
    assert back.size() == c.size()
    assert back.to_json() == c.to_json()


def test_bench_and_dot_exports():
    c = ba.generate_sum(4, "mdfa")
    bench = c.to_bench()
    assert "INPUT(x1)" in bench and "OUTPUT(y0)" in bench
    assert "# significances:" in bench
    assert "digraph" in c.to_dot()


def test_oracle_and_counterexample_types():
    assert ba.oracle_value([2, 3, 3], [1, 1, 1]) == 20
    assert ba.oracle_value([30] * 40, [1] * 40) == 40 << 30


def test_tables():
    rows = ba.reproduce_table("1")
    assert ("sum", 7, "fa", 20) == rows[0][:4]
    assert rows[1][3] == 19
    csv = ba.table_csv("1")
    assert csv.startswith("function,n,method,size,depth\n")


def test_errors_are_exceptions():
    with pytest.raises(ValueError):
        ba.generate_ba([0, 2_000_000], "mdfa")  # significance guard
    with pytest.raises(ValueError):
        ba.generate_sum(8, "nope")
