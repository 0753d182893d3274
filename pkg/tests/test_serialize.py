import json

import pytest

from premodular.catalog import catalog_get, catalog_list
from premodular.cyclotomic import make_root
from premodular.serialize import (
    ParseError,
    ValidationError,
    datum_to_json,
    loads_datum,
    load_datum,
    metric_group_from_json,
    premodular_from_json,
)


@pytest.mark.parametrize("name", [n for n, _, _ in catalog_list()])
def test_round_trip_every_catalog_entry(name):
    payload = catalog_get(name).payload
    text = json.dumps(datum_to_json(payload))
    again = loads_datum(text)
    assert again == payload


def test_round_trip_is_byte_stable(tmp_path):
    payload = catalog_get("ising:5").payload
    one = json.dumps(datum_to_json(payload))
    two = json.dumps(datum_to_json(loads_datum(one)))
    assert one == two


def test_theta_exp_alternative_form():
    # rebuild the premodular datum with twists given as rational exponents
    from premodular.metric_groups import to_premodular

    data = to_premodular(catalog_get("svec").payload)
    pm = datum_to_json(data)
    del pm["twists"]
    pm["theta_exp"] = [["0", "1"], ["1", "2"]]
    loaded = premodular_from_json(pm)
    assert loaded.twists[0] == make_root(0, 1)
    assert loaded.twists[1] == make_root(1, 2)
    assert loads_datum(json.dumps(pm)) == data


def test_parse_errors():
    with pytest.raises(ParseError):
        loads_datum("not json")
    with pytest.raises(ParseError):
        loads_datum(json.dumps({"orders": [2]}))  # missing discriminator
    with pytest.raises(ParseError):
        loads_datum(json.dumps({"type": "widget"}))
    with pytest.raises(ParseError):
        loads_datum(json.dumps({"type": "metric_group", "orders": [2], "q": {"0": "0/1"}}))


def test_negative_fusion_index_is_a_parse_error():
    obj = datum_to_json(catalog_get("ising:1").payload)
    obj["fusion"][0][0] = -1
    with pytest.raises(ParseError):
        loads_datum(json.dumps(obj))


def test_validation_error_carries_witnesses():
    obj = datum_to_json(catalog_get("svec").payload)
    obj["q"]["(1)"] = "1/3"
    with pytest.raises(ValidationError) as err:
        loads_datum(json.dumps(obj))
    assert "QuadraticLawViolation" in err.value.report.kinds()


def test_corrupted_dimension_in_premodular_file(tmp_path):
    from premodular.metric_groups import to_premodular

    data = to_premodular(catalog_get("svec").payload)
    obj = datum_to_json(data)
    obj["dims"][1] = {"n": 1, "c": [["2", "1"]]}  # d_e = 2
    del obj["s"]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(obj))
    with pytest.raises(ValidationError) as err:
        load_datum(str(path))
    assert "DimensionCharacterViolation" in err.value.report.kinds()


def test_metric_group_element_key_format():
    obj = {
        "type": "metric_group",
        "orders": [2, 2],
        "q": {"(0,0)": "0/1", "(0,1)": "0/1", "(1,0)": "0/1", "(1,1)": "1/2"},
    }
    mg = metric_group_from_json(obj)
    assert mg.qtable == catalog_get("toric").payload.qtable
