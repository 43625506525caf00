"""Child-process invocation of object-language checkers and runners.

Command templates use {file}, {dir} and {main_class} placeholders. The child
gets an inherited-but-filtered environment (credential-looking variables are
dropped) and its own process group so a timeout can kill the whole tree.
"""

from __future__ import annotations

import os
import shutil
import signal
import subprocess
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from bsup.units import ObjectLanguage

_SENSITIVE = ("KEY", "TOKEN", "SECRET", "PASSWORD", "CREDENTIAL", "AUTHORIZATION")

_PYCHECK = str(Path(__file__).with_name("_pycheck.py"))
_JAVAKIN = str(Path(__file__).with_name("javakin.py"))


class ToolchainError(RuntimeError):
    """Configuration error: the configured toolchain cannot be invoked at all."""


@dataclass(frozen=True)
class ToolchainConfig:
    language: ObjectLanguage
    check_cmd: tuple[str, ...]
    run_cmd: tuple[str, ...]
    compile_cmd: tuple[str, ...] | None = None
    check_timeout: float = 10.0
    source_filename: str = "snippet.py"
    main_class: str = "Problem"
    env: dict[str, str] = field(default_factory=dict)

    def render(self, cmd: tuple[str, ...], *, file: str, directory: str) -> list[str]:
        subs = {"file": file, "dir": directory, "main_class": self.main_class}
        return [part.format(**subs) for part in cmd]

    def ensure_available(self) -> None:
        for cmd in filter(None, (self.check_cmd, self.compile_cmd, self.run_cmd)):
            exe = cmd[0]
            if shutil.which(exe) is None and not Path(exe).exists():
                raise ToolchainError(f"toolchain command not found: {exe!r}")


@dataclass(frozen=True)
class ProcResult:
    exit_code: int | None
    stdout: str
    stderr: str
    duration_ns: int
    timed_out: bool

    @property
    def ok(self) -> bool:
        return self.exit_code == 0 and not self.timed_out


def filtered_env(extra: dict[str, str] | None = None) -> dict[str, str]:
    env = {
        k: v
        for k, v in os.environ.items()
        if not any(marker in k.upper() for marker in _SENSITIVE)
    }
    if extra:
        env.update(extra)
    return env


def invoke(
    cmd: list[str],
    *,
    cwd: str,
    timeout: float,
    env: dict[str, str] | None = None,
) -> ProcResult:
    start = time.perf_counter_ns()
    try:
        proc = subprocess.Popen(
            cmd,
            cwd=cwd,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
            text=True,
            env=filtered_env(env),
            start_new_session=True,
        )
    except OSError as exc:
        raise ToolchainError(f"cannot launch {cmd[0]!r}: {exc}") from exc
    try:
        stdout, stderr = proc.communicate(timeout=timeout)
        timed_out = False
    except subprocess.TimeoutExpired:
        _kill_tree(proc)
        stdout, stderr = proc.communicate()
        timed_out = True
    return ProcResult(
        exit_code=proc.returncode,
        stdout=stdout or "",
        stderr=stderr or "",
        duration_ns=time.perf_counter_ns() - start,
        timed_out=timed_out,
    )


def _kill_tree(proc: subprocess.Popen) -> None:
    try:
        os.killpg(os.getpgid(proc.pid), signal.SIGKILL)
    except (ProcessLookupError, PermissionError):
        proc.kill()


def jdk_available() -> bool:
    return shutil.which("javac") is not None and shutil.which("java") is not None


def default_toolchain(language: ObjectLanguage) -> ToolchainConfig:
    """Default commands per language.

    JavaLike prefers a real JDK from PATH; without one it falls back to the
    bundled javakin checker/runner, which speaks the same diagnostics shape.
    """
    if language is ObjectLanguage.PYTHON_LIKE:
        return ToolchainConfig(
            language=language,
            check_cmd=(sys.executable, _PYCHECK, "{file}"),
            run_cmd=(sys.executable, "{file}"),
            source_filename="snippet.py",
        )
    if jdk_available():
        return ToolchainConfig(
            language=language,
            check_cmd=("javac", "{file}"),
            compile_cmd=("javac", "{file}"),
            run_cmd=("java", "-ea", "-cp", "{dir}", "{main_class}"),
            source_filename="Problem.java",
        )
    return ToolchainConfig(
        language=language,
        check_cmd=(sys.executable, _JAVAKIN, "check", "{file}"),
        compile_cmd=(sys.executable, _JAVAKIN, "check", "{file}"),
        run_cmd=(sys.executable, _JAVAKIN, "run", "--ea", "{file}"),
        source_filename="Problem.java",
    )
