"""Runs the ```console blocks of a markdown file and diffs their output.

A block holds one or more commands, each a line starting with "$ iterasym",
followed by the expected combined stdout and stderr.
"""

import argparse
import difflib
import re
import shlex
import subprocess
import sys

BLOCK = re.compile(r"^```console\n(.*?)^```", re.M | re.S)


def examples(markdown):
    for block in BLOCK.findall(markdown):
        command, expected = None, []
        for line in block.splitlines():
            if line.startswith("$ "):
                if command:
                    yield command, expected
                command, expected = line[2:], []
            elif command is not None:
                expected.append(line)
        if command:
            yield command, expected


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True, help="path to the iterasym executable")
    ap.add_argument("markdown")
    args = ap.parse_args()

    with open(args.markdown, encoding="utf-8") as fh:
        text = fh.read()

    failures = count = 0
    for command, expected in examples(text):
        argv = shlex.split(command)
        if argv[0] != "iterasym":
            continue
        count += 1
        run = subprocess.run([args.cli] + argv[1:], capture_output=True, text=True, timeout=120)
        got = (run.stdout + run.stderr).splitlines()
        if got != expected:
            failures += 1
            print(f"FAIL: {command}")
            sys.stdout.writelines(line + "\n" for line in difflib.unified_diff(expected, got, "README", "actual", lineterm=""))
        else:
            print(f"ok:   {command}")

    if count == 0:
        print("no examples found")
        return 1
    print(f"{count - failures}/{count} README examples match")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
