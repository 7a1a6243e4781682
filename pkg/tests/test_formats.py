from blockade.formats import table_from_csv, table_from_json, table_to_csv, table_to_dict, table_to_json
from blockade.seqcore import n_table
from blockade.setfam import MTable, m_table


def test_csv_layout():
    text = table_to_csv(n_table(3, 2))
    assert text.splitlines() == [
        "index,word,value",
        "0,ALPHA,0",
        "1,&,1",
        "2,,3",
        "3,|,5",
        "4,OMEGA,9",
    ]


def test_json_layout():
    d = table_to_dict(n_table(2, 1))
    assert d == {"n": 2, "r": 1, "entries": [
        {"i": 0, "word": "ALPHA", "value": "0"},
        {"i": 1, "word": "", "value": "1"},
        {"i": 2, "word": "OMEGA", "value": "2"},
    ]}


def test_roundtrips():
    for table in (n_table(4, 5), n_table(50, 4)):
        assert table_from_csv(table_to_csv(table), table.n, table.r) == table
        assert table_from_json(table_to_json(table)) == table
    M = m_table(8, 3)
    assert table_from_json(table_to_json(M), MTable) == M
    assert table_from_csv(table_to_csv(M), 8, 3, MTable) == M


def test_big_values_are_strings():
    d = table_to_dict(n_table(10**6, 4))
    assert d["entries"][-1]["value"] == str(10**24)
