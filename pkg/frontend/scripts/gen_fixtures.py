#!/usr/bin/env python3
"""Regenerate the recorded service responses the UI tests run against.

Run from the repository root after changing the scoring package:

    python3 frontend/scripts/gen_fixtures.py
"""

import json
from pathlib import Path

from rvss import Scheme, catalog_export, codec, engine

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "fixtures"

VECTORS = {
    "score_case1_rvss": "RVSS:1.0/AV:ANPR/AC:L/PR:N/UI:N/Y:T/S:U/C:N/I:H/A:H/H:E",
    "score_case2_rvss": "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:O/S:U/C:H/I:H/A:H/H:E",
    "score_case3_rvss": "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:T/S:C/C:H/I:H/A:H/H:H",
    "score_case4_rvss": "RVSS:1.0/AV:AN/AC:L/PR:N/UI:N/Y:O/S:U/C:N/I:N/A:N/H:H",
    "score_env_worked_cvss":
        "CVSS:3.0/AV:N/AC:L/PR:N/UI:N/S:U/C:N/I:H/A:H/E:P/RL:U/RC:C/IR:H/AR:H",
    "score_case1_safety_none":
        "RVSS:1.0/AV:ANPR/AC:L/PR:N/UI:N/Y:T/S:U/C:N/I:H/A:H/H:N",
}


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    for slug, scheme in (("cvss3", Scheme.CVSS_3_0), ("rvss1", Scheme.RVSS_1_0)):
        path = FIXTURES / f"catalog_{slug}.json"
        path.write_text(json.dumps(catalog_export(scheme), indent=2) + "\n")
    for name, vector in VECTORS.items():
        report = engine.score(codec.parse(vector)).to_json_dict()
        (FIXTURES / f"{name}.json").write_text(json.dumps(report, indent=2) + "\n")
    print(f"wrote {2 + len(VECTORS)} fixtures to {FIXTURES}")


if __name__ == "__main__":
    main()
