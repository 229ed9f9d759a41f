#!/usr/bin/env python3
# Copyright 2026 The Lexkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates include/lexkit/unicode_data.hpp from Python's unicodedata.

Canonical decompositions are at most two code points; Hangul syllables
(U+AC00..U+D7A3) are omitted because both decomposition and composition
are algorithmic. Composition pairs are derived by checking NFC(a+b) == c,
which folds in the composition exclusions without needing the raw UCD
files. The simple lowercase table keeps only 1:1 mappings.
"""

import sys
import unicodedata

HANGUL_FIRST = 0xAC00
HANGUL_LAST = 0xD7A3
MAX_CP = 0x10FFFF


def code_points():
    for cp in range(MAX_CP + 1):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        yield cp


def canonical_decompositions():
    rows = []
    for cp in code_points():
        if HANGUL_FIRST <= cp <= HANGUL_LAST:
            continue
        raw = unicodedata.decomposition(chr(cp))
        if not raw or raw.startswith("<"):
            continue
        parts = [int(p, 16) for p in raw.split()]
        if len(parts) == 1:
            rows.append((cp, parts[0], 0))
        elif len(parts) == 2:
            rows.append((cp, parts[0], parts[1]))
        else:
            raise ValueError(f"canonical decomposition of U+{cp:04X} has {len(parts)} parts")
    return rows


def combining_classes():
    return [(cp, unicodedata.combining(chr(cp)))
            for cp in code_points()
            if unicodedata.combining(chr(cp)) != 0]


def composition_pairs(decomps):
    rows = []
    for cp, first, second in decomps:
        if second == 0 or unicodedata.combining(chr(first)) != 0:
            continue
        if unicodedata.normalize("NFC", chr(first) + chr(second)) == chr(cp):
            rows.append((first, second, cp))
    rows.sort()
    return rows


def simple_lower():
    rows = []
    for cp in code_points():
        low = chr(cp).lower()
        if len(low) == 1 and low != chr(cp):
            rows.append((cp, ord(low)))
    return rows


def emit_table(out, name, struct, rows):
    out.write(f"inline constexpr {struct} {name}[] = {{\n")
    for i in range(0, len(rows), 4):
        chunk = ", ".join("{" + ", ".join(f"0x{v:X}" for v in row) + "}"
                          for row in rows[i:i + 4])
        out.write(f"    {chunk},\n")
    out.write("};\n\n")


def main():
    decomps = canonical_decompositions()
    cccs = combining_classes()
    comps = composition_pairs(decomps)
    lowers = simple_lower()

    out = sys.stdout
    out.write("""// Copyright 2026 The Lexkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by tools/gen_unicode_data.py""")
    out.write(f" (Unicode {unicodedata.unidata_version}). Do not edit.\n\n")
    out.write("#pragma once\n\n#include <cstdint>\n\n")
    out.write("namespace lexkit::unicode::detail {\n\n")
    out.write("struct DecompRow { char32_t cp; char32_t first; char32_t second; };\n")
    out.write("struct CccRow { char32_t cp; std::uint8_t ccc; };\n")
    out.write("struct CompRow { char32_t first; char32_t second; char32_t composed; };\n")
    out.write("struct LowerRow { char32_t cp; char32_t lower; };\n\n")
    emit_table(out, "kCanonicalDecomp", "DecompRow", decomps)
    emit_table(out, "kCombiningClass", "CccRow", cccs)
    emit_table(out, "kCanonicalComp", "CompRow", comps)
    emit_table(out, "kSimpleLower", "LowerRow", lowers)
    out.write("}  // namespace lexkit::unicode::detail\n")


if __name__ == "__main__":
    main()
