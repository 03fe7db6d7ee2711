"""sumsetkit CLI 入口点"""

import io
import sys

from sumsetkit.cli import app


def setup_utf8_output():
    """强制设置 stdout/stderr 为 UTF-8 编码

    报告中含 ℕ、⟦⟧ 等字符，老版 Windows 控制台默认编码会乱码
    """
    if sys.platform == "win32":
        for name in ("stdout", "stderr"):
            stream = getattr(sys, name)
            if hasattr(stream, "buffer"):
                setattr(
                    sys,
                    name,
                    io.TextIOWrapper(
                        stream.buffer,
                        encoding="utf-8",
                        errors="replace",
                        line_buffering=True,
                    ),
                )


def main():
    """CLI 主入口"""
    setup_utf8_output()
    app()


if __name__ == "__main__":
    main()
