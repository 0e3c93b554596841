#!/usr/bin/env python3
"""Regenerate src/unicode_tables.inc from Python's unicodedata.

The tokenizer needs two tables: contiguous codepoint ranges of letter
characters (general category L*), and the simple lowercase mapping for
letters whose lowercase form differs from the character itself.

The generated tables are self-consistent by construction:
  * lower(c) is a letter for every letter c
  * lower(lower(c)) == lower(c)
Mappings that would violate either invariant are dropped (the character
then lowercases to itself).
"""

import sys
import unicodedata

MAX_CP = 0x110000


def is_letter(cp):
    return unicodedata.category(chr(cp)).startswith("L")


def simple_lower(cp):
    low = chr(cp).lower()
    # Full case mapping expands a handful of characters (e.g. U+0130) to
    # multiple codepoints; the simple mapping keeps the first letter.
    cand = ord(low[0])
    if cand == cp or not is_letter(cand):
        return cp
    return cand


def main(out_path):
    letters = [cp for cp in range(MAX_CP) if is_letter(cp)]

    ranges = []
    start = prev = letters[0]
    for cp in letters[1:]:
        if cp == prev + 1:
            prev = cp
            continue
        ranges.append((start, prev))
        start = prev = cp
    ranges.append((start, prev))

    lower_pairs = []
    for cp in letters:
        low = simple_lower(cp)
        if low == cp:
            continue
        # enforce idempotence
        if simple_lower(low) != low:
            continue
        lower_pairs.append((cp, low))

    for cp, low in lower_pairs:
        assert is_letter(low)
        assert simple_lower(low) == low

    with open(out_path, "w") as f:
        f.write("// Generated by scripts/gen_unicode_tables.py -- do not edit.\n")
        f.write("// Unicode data version: %s\n\n" % unicodedata.unidata_version)
        f.write("// [first, last] codepoint ranges with general category L*.\n")
        f.write("inline constexpr Utf32Range kLetterRanges[] = {\n")
        for i in range(0, len(ranges), 4):
            row = ", ".join("{0x%X, 0x%X}" % r for r in ranges[i : i + 4])
            f.write("    %s,\n" % row)
        f.write("};\n\n")
        f.write("// (codepoint, simple lowercase) for letters that change under lowercasing.\n")
        f.write("inline constexpr Utf32Pair kLowerPairs[] = {\n")
        for i in range(0, len(lower_pairs), 4):
            row = ", ".join("{0x%X, 0x%X}" % p for p in lower_pairs[i : i + 4])
            f.write("    %s,\n" % row)
        f.write("};\n")

    print("letter ranges: %d, lowercase pairs: %d" % (len(ranges), len(lower_pairs)))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc")
