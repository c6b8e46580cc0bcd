"""Generator files, table files and JSON reports.

Writes a generator file for SL(2,3), reads it back, stores its character
table as JSON and reloads it (the loader re-checks both orthogonality
relations). A damaged table is rejected with the first failing relation.
"""

from __future__ import annotations

import json
import tempfile
from pathlib import Path

from blockforge.catalog import load_catalog_group
from blockforge.chartable import table_for
from blockforge.errors import TableInconsistent
from blockforge.formats import dumps, format_generators, load_group, load_table, table_to_json


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        gens = tmp / "sl23.txt"
        gens.write_text(format_generators(load_catalog_group("SL(2,3)")))
        print(gens.read_text())
        G = load_group(str(gens))
        tbl = table_for(G)
        path = tmp / "sl23.json"
        path.write_text(dumps(table_to_json(tbl)))
        back = load_table(path)
        print("reloaded table matches:", back.values == tbl.values)

        obj = json.loads(path.read_text())
        obj["chars"][1][0] = {"n": 1, "terms": [[0, "2/1"]]}
        path.write_text(json.dumps(obj))
        try:
            load_table(path)
        except TableInconsistent as exc:
            print("damaged table rejected:", exc)


if __name__ == "__main__":
    main()
