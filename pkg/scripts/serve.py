#!/usr/bin/env python3
"""Run the identification HTTP service.

    python scripts/serve.py --port 8000 --cors http://localhost:5173
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import uvicorn

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from vrtta.service import create_app


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument("--port", type=int, default=8000)
    parser.add_argument("--db", dest="db_path")
    parser.add_argument(
        "--cors", nargs="*", default=["*"],
        help="allowed origins for the browser UI",
    )
    args = parser.parse_args()
    app = create_app(db_path=args.db_path, cors_origins=args.cors)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    sys.exit(main())
