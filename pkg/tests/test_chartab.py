import copy
import json
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import table_and_chars
from lambdacl.chartab import (ClassFunction, IntegralityError, TableValidationError, abelian_char_table,
                              decompose, load_table, load_table_file, pairing, product, table_to_json,
                              to_virtual, validate_char_table)


def test_catalog_orthogonality(catalog_table):
    t = catalog_table
    for a in range(t.rank):
        for b in range(t.rank):
            assert pairing(t.irreducible(a), t.irreducible(b)) == (1 if a == b else 0)
    assert sum(d * d for d in t.degrees) == t.order


def test_catalog_roundtrip(catalog_table):
    data = table_to_json(catalog_table)
    again = validate_char_table(json.loads(json.dumps(data)))
    assert again.irreducibles == catalog_table.irreducibles
    assert again.power_maps == catalog_table.power_maps


def test_regular_character(catalog_table):
    t = catalog_table
    assert t.regular().coords == t.degrees
    vals = t.regular().class_function().values
    assert vals[0].to_rational() == t.order and all(v.is_zero() for v in vals[1:])


def test_s3_tensor_square():
    s3 = load_table("s3")
    std = s3.irreducible(2)
    assert product(std, std).coords == (1, 1, 1)


def test_abelian_products_add_labels():
    t = load_table("c2xc4")
    for a in range(t.rank):
        for b in range(t.rank):
            la, lb = t.element_labels[a], t.element_labels[b]
            c = t.element_labels.index(tuple((x + y) % n for x, y, n in zip(la, lb, (2, 4))))
            assert product(t.irreducible(a), t.irreducible(b)).coords == tuple(int(i == c) for i in range(t.rank))


@given(table_and_chars(3))
def test_product_ring_axioms(args):
    t, x, y, z = args
    assert product(x, y) == product(y, x)
    assert product(product(x, y), z) == product(x, product(y, z))
    assert product(x, y + z) == product(x, y) + product(x, z)
    assert product(x, t.trivial()) == x


def test_decompose_reports_offenders():
    t = load_table("c2")
    half = ClassFunction.from_ints(t, [Fraction(1, 2), Fraction(1, 2)])
    d = decompose(half)
    assert not d.integral
    with pytest.raises(IntegralityError):
        to_virtual(half)


def test_generated_table_name_and_size():
    t = abelian_char_table([2, 4])
    assert t.name == "C2xC4" and t.order == 8 and t.exponent == 4
    assert abelian_char_table([]).order == 1


# --- validation failures ---------------------------------------------------------------

@pytest.fixture
def s3_data():
    return table_to_json(load_table("s3"))


def _errors(data):
    with pytest.raises(TableValidationError) as info:
        validate_char_table(data)
    return " ".join(info.value.errors)


def test_rejects_bad_class_sizes(s3_data):
    s3_data["classes"][1]["size"] = 2
    assert "size" in _errors(s3_data)


def test_rejects_non_orthogonal_rows(s3_data):
    s3_data["irreducibles"][1] = copy.deepcopy(s3_data["irreducibles"][0])
    assert _errors(s3_data)


def test_rejects_floats(s3_data):
    s3_data["irreducibles"][0][0][0] = 1.0
    assert "float" in _errors(s3_data)


def test_rejects_broken_power_map(s3_data):
    s3_data["power_maps"][2][2] = 0   # a 3-cycle squared is not the identity
    assert "power" in _errors(s3_data).lower()


def test_rejects_bad_cayley(s3_data):
    s3_data["cayley"][0][0] = 1
    assert _errors(s3_data)


def test_rejects_missing_fields(s3_data):
    del s3_data["exponent"]
    assert _errors(s3_data)


def test_load_table_file(tmp_path, s3_data):
    p = tmp_path / "s3.json"
    p.write_text(json.dumps(s3_data))
    assert load_table_file(p).rank == 3
    assert load_table(str(p)).rank == 3


def test_unknown_table():
    with pytest.raises(ValueError):
        load_table("nosuchgroup")
