"""Standalone syntax checker for Python-style units.

Run as a script (never imported by the package) so a checker child process
pays no package-import cost: compile the file, print one diagnostic line on
failure, exit non-zero.
"""

import sys


def main() -> int:
    path = sys.argv[1]
    with open(path, encoding="utf-8") as fh:
        source = fh.read()
    try:
        compile(source, path, "exec")
    except SyntaxError as exc:  # includes IndentationError and TabError
        print(f"{type(exc).__name__}: {exc.msg} ({path}, line {exc.lineno})", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"ValueError: {exc} ({path})", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
