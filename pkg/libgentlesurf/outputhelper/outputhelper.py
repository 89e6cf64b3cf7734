"""
    Result writers for json and dot output
"""
import os
import sys
import logging

log = logging.getLogger(__name__)


class dirFunc:
    """Create parent directory of an output file"""

    def _makeDir(self):
        targetDir = os.path.dirname(self.fileName)
        if not targetDir:
            return
        if os.path.exists(targetDir) and not os.path.isdir(targetDir):
            log.error("Parent of output file is not a directory: [%s]", targetDir)
            raise SystemExit(1)
        if not os.path.exists(targetDir):
            try:
                os.makedirs(targetDir)
            except OSError as e:
                log.error("Unable to create output directory: %s", e)
                raise SystemExit(1) from e


class outputHelper:
    """Directs command results to either a regular file or stdout"""

    class File(dirFunc):
        """Result file"""

        def __init__(self, fileName):
            self.fileName = fileName
            self.fileHandle = None

            self._makeDir()

        def open(self, mode="w"):
            """Return file handle"""
            try:
                self.fileHandle = open(self.fileName, mode, encoding="utf-8")
            except OSError as e:
                log.error("Unable to open output file: %s", e)
                raise SystemExit(1) from e
            return self.fileHandle

        def close(self):
            """Close wrapper"""
            return self.fileHandle.close()

        def write(self, data):
            """Write handle wrapper"""
            return self.fileHandle.write(data)

    class Stdout:
        """Results to standard output"""

        def __init__(self):
            self.fileHandle = sys.stdout

        def open(self):
            """Open wrapper"""
            return self.fileHandle

        def close(self):
            """Flush, stdout stays open"""
            return self.fileHandle.flush()

        def write(self, data):
            """Write wrapper"""
            return self.fileHandle.write(data)


def getWriter(target):
    """Writer for target file name, stdout for None or '-'"""
    if target in (None, "-"):
        return outputHelper.Stdout()
    return outputHelper.File(target)


def emit(target, text):
    """Write text to target, terminated by a newline"""
    writer = getWriter(target)
    writer.open()
    try:
        writer.write(text if text.endswith("\n") else text + "\n")
    finally:
        writer.close()
