"""Target functions, training sets, oracles and file formats."""

import json

import numpy as np
import pytest

from src.boolean import (
    DnfFormula,
    DnfFunction,
    ExampleOracle,
    Literal,
    MembershipOracle,
    ParityFunction,
    TrainingSet,
    TruthTableFunction,
    bits_to_index,
    build_training_set,
    evaluate,
    index_to_bits,
    load_function,
    load_training_set,
    random_dnf,
    sample_training_set,
    save_dnf,
    save_training_set,
    save_truth_table,
    to_truth_table,
)
from src.boolean.bits import chi_values, parity
from src.boolean.formats import dnf_from_dict, function_from_dict
from src.errors import FormatError, InputShapeError, ParameterError, PreconditionError, ResourceError
from src.harness import chi_square_pvalue


@pytest.mark.parametrize("bits, index", [("0", 0), ("1", 1), ("10", 2), ("0110", 6), ([1, 0, 1], 5)])
def test_big_endian_indexing(bits, index):
    assert bits_to_index(bits) == index
    assert index_to_bits(index, len(bits)) == "".join(str(b) for b in bits)


def test_bits_validation():
    with pytest.raises(InputShapeError):
        bits_to_index("012")
    with pytest.raises(InputShapeError):
        bits_to_index("01", 3)
    with pytest.raises(InputShapeError):
        index_to_bits(4, 2)


def test_parity_and_chi():
    assert parity(np.array([0, 1, 3, 7, 0b1011])).tolist() == [0, 1, 0, 1, 1]
    # chi_10 on 00, 01, 10, 11
    assert chi_values(0b10, np.arange(4)).tolist() == [1, 1, -1, -1]


def test_truth_table_evaluation(worked_function):
    assert evaluate(worked_function, "10") == -1
    assert worked_function("11") == 1
    assert worked_function.truth_table().tolist() == [1, 1, -1, 1]
    with pytest.raises(InputShapeError):
        worked_function.eval("1")


def test_truth_table_validation():
    with pytest.raises(InputShapeError):
        TruthTableFunction([1, -1, 1])
    with pytest.raises(InputShapeError):
        TruthTableFunction([1, 0])


def test_dnf_evaluation():
    # x0 & ~x1  |  x2
    formula = DnfFormula(3, ((Literal(0), Literal(1, negated=True)), (Literal(2),)))
    f = DnfFunction(formula)
    assert f("100") == 1
    assert f("110") == -1
    assert f("011") == 1
    assert f("000") == -1
    assert str(formula) == "(x0 & ~x1) | (x2)"


def test_empty_dnf_is_false():
    f = DnfFunction(DnfFormula(2))
    assert f.truth_table().tolist() == [-1, -1, -1, -1]


def test_dnf_validation():
    with pytest.raises(InputShapeError):
        DnfFormula(2, ((Literal(2),),))
    with pytest.raises(ParameterError):
        DnfFormula(2, ((Literal(0), Literal(0, negated=True)),))


def test_parity_function():
    f = ParityFunction(3, 0b101)
    table = f.truth_table().tolist()
    assert table == [1, -1, 1, -1, -1, 1, -1, 1]


def test_to_truth_table_matches_backing():
    formula = random_dnf(6, 3, 2, np.random.default_rng(5))
    f = DnfFunction(formula)
    assert np.array_equal(to_truth_table(f).truth_table(), f.truth_table())


def test_truth_table_respects_cap():
    with pytest.raises(ResourceError):
        ParityFunction(10, 1).truth_table(cap=8)


def test_random_dnf_is_deterministic_and_well_formed():
    a = random_dnf(10, 4, 3, np.random.default_rng(42))
    b = random_dnf(10, 4, 3, np.random.default_rng(42))
    assert a == b
    assert len(a.terms) == 4
    for term in a.terms:
        variables = [lit.var for lit in term]
        assert len(set(variables)) == 3
        assert variables == sorted(variables)


def test_random_dnf_parameters():
    rng = np.random.default_rng(0)
    with pytest.raises(ParameterError):
        random_dnf(3, 2, 4, rng)
    with pytest.raises(ParameterError):
        random_dnf(3, 0, 1, rng)


def test_training_set_deduplicates():
    training_set = TrainingSet.from_examples(2, [("10", -1), ("00", 1), ("10", -1)])
    assert training_set.m == 2
    assert training_set.indices.tolist() == [0, 2]
    assert training_set.label("10") == -1
    assert training_set.label("11") is None
    assert "00" in training_set


def test_training_set_rejects_contradictions():
    with pytest.raises(FormatError):
        TrainingSet.from_examples(2, [("10", -1), ("10", 1)])
    with pytest.raises(FormatError):
        TrainingSet.from_arrays(2, np.array([1, 1]), np.array([1, -1]))


def test_empty_training_set():
    with pytest.raises(PreconditionError):
        TrainingSet.from_examples(2, [])


def test_from_arrays_keeps_distinct_inputs():
    training_set = TrainingSet.from_arrays(3, np.array([5, 1, 5, 1, 7]), np.array([1, -1, 1, -1, 1]))
    assert training_set.indices.tolist() == [1, 5, 7]
    assert training_set.labels.tolist() == [-1, 1, 1]


def test_example_oracle_draws_labeled_examples(worked_function, rng):
    oracle = ExampleOracle(worked_function, rng)
    xs, ys = oracle.draw_many(500)
    assert oracle.draws == 500
    assert np.all((xs >= 0) & (xs < 4))
    assert np.array_equal(ys, worked_function.truth_table()[xs])
    bits, label = oracle.draw()
    assert len(bits) == 2 and label == worked_function(bits)


def test_example_oracle_does_not_expose_membership(worked_function, rng):
    oracle = ExampleOracle(worked_function, rng)
    assert not hasattr(oracle, "query")
    assert not hasattr(oracle, "function")


def test_membership_oracle_counts_queries(worked_function):
    oracle = MembershipOracle(worked_function)
    assert [oracle.query(x) for x in ("00", "01", "10", "11")] == [1, 1, -1, 1]
    assert oracle.queries == 4


def test_training_set_from_oracle(rng):
    f = ParityFunction(4, 0b0110)
    training_set = sample_training_set(ExampleOracle(f, rng), 20)
    assert 1 <= training_set.m <= 20
    for x, y in training_set:
        assert f.value_at(x) == y


def test_full_table_regime_covers_every_input(rng):
    # 256 draws leave one of 8 inputs unseen with probability below 8 * (7/8)^256
    training_set = build_training_set(ParityFunction(3, 1), 4 * 8 * 8, rng)
    assert training_set.m == 8


def test_function_files_round_trip(tmp_path, worked_function):
    save_truth_table(tmp_path / "table.json", worked_function)
    loaded = load_function(tmp_path / "table.json")
    assert loaded.truth_table().tolist() == [1, 1, -1, 1]

    formula = random_dnf(5, 2, 2, np.random.default_rng(3))
    save_dnf(tmp_path / "dnf.json", formula)
    data = json.loads((tmp_path / "dnf.json").read_text())
    assert data["schema_version"] == 1
    assert dnf_from_dict(data) == formula


def test_training_set_file(tmp_path, worked_training_set):
    save_training_set(tmp_path / "t.json", worked_training_set)
    data = json.loads((tmp_path / "t.json").read_text())
    assert data["examples"] == [{"x": "00", "y": 1}, {"x": "01", "y": 1}, {"x": "10", "y": -1}]
    assert load_training_set(tmp_path / "t.json") == worked_training_set


@pytest.mark.parametrize("data", [
    {"n": 2, "outputs": [1, 1, -1]},
    {"n": 2, "outputs": [1, 1, 0, 1]},
    {"n": "2", "outputs": [1, 1, -1, 1]},
    {"n": 2, "terms": [[{"var": 5}]]},
    {"n": 2, "terms": [[{"var": 0, "neg": "yes"}]]},
    {"n": 2},
])
def test_malformed_function_files(data):
    with pytest.raises(FormatError):
        function_from_dict(data)


def test_unreadable_files(tmp_path):
    (tmp_path / "bad.json").write_text("{", encoding="utf-8")
    with pytest.raises(FormatError):
        load_function(tmp_path / "bad.json")
    with pytest.raises(FormatError):
        load_function(tmp_path / "missing.json")


def test_contradictory_training_file(tmp_path):
    (tmp_path / "t.json").write_text(json.dumps(
        {"n": 2, "examples": [{"x": "01", "y": 1}, {"x": "01", "y": -1}]}
    ), encoding="utf-8")
    with pytest.raises(FormatError):
        load_training_set(tmp_path / "t.json")


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 7))
def test_example_oracle_is_uniform(n):
    f = ParityFunction(n, 1)
    xs, _ = ExampleOracle(f, np.random.default_rng(100 + n)).draw_many(1_000_000)
    counts = np.bincount(xs, minlength=1 << n)
    assert chi_square_pvalue(counts, np.full(1 << n, 1.0 / (1 << n))) > 0.001


def test_single_variable_oracle_is_balanced():
    xs, _ = ExampleOracle(ParityFunction(1, 1), np.random.default_rng(3)).draw_many(10_000)
    assert abs(np.mean(xs == 1) - 0.5) < 0.02


def test_random_dnf_is_rarely_constant():
    constant = 0
    for seed in range(1000):
        table = DnfFunction(random_dnf(8, 4, 3, np.random.default_rng(seed))).truth_table()
        constant += len(set(table.tolist())) == 1
    assert constant <= 10


def _term_by_term(formula, x):
    bits = index_to_bits(x, formula.n)
    for term in formula.terms:
        if all(bits[lit.var] == ("0" if lit.negated else "1") for lit in term):
            return 1
    return -1


def test_dnf_evaluation_matches_term_by_term_reading():
    rng = np.random.default_rng(12)
    for n in (1, 3, 7, 12):
        for _ in range(3):
            formula = random_dnf(n, int(rng.integers(1, 6)), int(rng.integers(1, min(n, 4) + 1)), rng)
            table = DnfFunction(formula).truth_table()
            expected = [_term_by_term(formula, x) for x in range(1 << n)]
            assert table.tolist() == expected
