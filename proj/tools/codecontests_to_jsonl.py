#!/usr/bin/env python3
"""Convert a CodeContests-style export into the cssg JSONL corpus format.

Input: a JSON or JSONL file whose records look like

    {"name": "<problem>", "solutions": {"language": [...], "solution": [...]},
     "incorrect_solutions": {"language": [...], "solution": [...]}}

Language codes follow the CodeContests convention (1 = Python 2, 2 = C++,
3 = Python 3, 4 = Java); string names are accepted as well. Output lines
carry problem_id, language, verdict, source and submission_id.
"""

import argparse
import json
import sys

LANGUAGE_CODES = {1: "python", 2: "cpp", 3: "python", 4: "java"}
LANGUAGE_NAMES = {"python": "python", "python3": "python", "py": "python", "java": "java", "cpp": "cpp", "c++": "cpp"}


def language_name(value):
    if isinstance(value, int):
        return LANGUAGE_CODES.get(value)
    return LANGUAGE_NAMES.get(str(value).lower())


def records(path):
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    stripped = text.lstrip()
    if stripped.startswith("["):
        yield from json.loads(text)
        return
    for line in text.splitlines():
        if line.strip():
            yield json.loads(line)


def convert(path, languages, limit):
    for record in records(path):
        problem = record.get("name") or record.get("problem_id")
        for field, verdict in (("solutions", "correct"), ("incorrect_solutions", "incorrect")):
            block = record.get(field) or {}
            kept = 0
            for index, (lang, source) in enumerate(zip(block.get("language", []), block.get("solution", []))):
                name = language_name(lang)
                if name is None or name not in languages or not source:
                    continue
                if limit and kept >= limit:
                    break
                kept += 1
                yield {
                    "problem_id": problem,
                    "language": name,
                    "verdict": verdict,
                    "source": source,
                    "submission_id": f"{problem}/{verdict}/{index}",
                }


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("input")
    parser.add_argument("-o", "--output", default="-")
    parser.add_argument("--languages", default="python,java", help="comma-separated languages to keep")
    parser.add_argument("--limit", type=int, default=0, help="max submissions per problem, verdict and field (0 = all)")
    args = parser.parse_args()

    languages = {name.strip().lower() for name in args.languages.split(",") if name.strip()}
    out = sys.stdout if args.output == "-" else open(args.output, "w", encoding="utf-8", newline="\n")
    try:
        for item in convert(args.input, languages, args.limit):
            out.write(json.dumps(item, ensure_ascii=False) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    main()
