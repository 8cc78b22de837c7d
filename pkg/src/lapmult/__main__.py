# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from .app import main

if __name__ == "__main__":
    raise SystemExit(main())
