#!/usr/bin/env python3
"""Regenerate corpus.jsonl from the per-problem solution files."""

import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent
LANGUAGES = {".py": "python", ".java": "java"}


def main():
    lines = []
    for problem in sorted(p for p in (ROOT / "problems").iterdir() if p.is_dir()):
        for path in sorted(problem.iterdir()):
            language = LANGUAGES.get(path.suffix)
            if language is None:
                continue
            verdict = "correct" if path.stem.startswith("correct") else "incorrect"
            lines.append(json.dumps({
                "problem_id": problem.name,
                "language": language,
                "verdict": verdict,
                "source": path.read_text(encoding="utf-8"),
                "submission_id": f"{problem.name}/{language}/{path.stem}",
            }, sort_keys=True))
    (ROOT / "corpus.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    print(f"{len(lines)} submissions")


if __name__ == "__main__":
    main()
