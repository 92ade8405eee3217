#!/usr/bin/env python3
# Copyright 2026 The Stylo Authors. All Rights Reserved.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#     http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates core/src/unicode_tables.inc from the host Python's Unicode
database. The table is checked in; rerun only when bumping the Unicode
version. Usage: python3 tools/gen_unicode_tables.py > core/src/unicode_tables.inc
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def lower_pairs():
    pairs = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        low = chr(cp).lower()
        if len(low) == 1 and ord(low) != cp:
            pairs.append((cp, ord(low)))
    return pairs


def emit_ranges(name, rs):
    print(f"static constexpr CodepointRange {name}[] = {{")
    for i in range(0, len(rs), 4):
        row = ", ".join(f"{{0x{lo:X}, 0x{hi:X}}}" for lo, hi in rs[i : i + 4])
        print(f"    {row},")
    print("};")
    print()


def main():
    print("// Generated by tools/gen_unicode_tables.py from Python "
          f"{sys.version.split()[0]} (Unicode {unicodedata.unidata_version}).")
    print("// Do not edit by hand.")
    print()
    alpha = ranges(str.isalpha)
    space = ranges(str.isspace)
    pairs = lower_pairs()
    emit_ranges("kAlphaRanges", alpha)
    emit_ranges("kSpaceRanges", space)
    print(f"static constexpr LowerPair kLowerPairs[] = {{")
    for i in range(0, len(pairs), 4):
        row = ", ".join(f"{{0x{a:X}, 0x{b:X}}}" for a, b in pairs[i : i + 4])
        print(f"    {row},")
    print("};")


if __name__ == "__main__":
    main()
