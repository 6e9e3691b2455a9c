#!/usr/bin/env python3
"""Regenerate core/data/stopwords.txt and core/data/background_freq.tsv.

stopwords.txt: the Glasgow IR stop list as shipped by scikit-learn
(sklearn.feature_extraction.text.ENGLISH_STOP_WORDS, BSD-3-Clause).

background_freq.tsv: the 5000 most frequent purely alphabetic English words
from the `wordfreq` package (data CC-BY-SA 4.0), one `word<TAB>frequency`
pair per line, frequency as a fraction of all tokens.
"""
import pathlib

from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS
from wordfreq import top_n_list, word_frequency

DATA = pathlib.Path(__file__).resolve().parent.parent / "core" / "data"


def main():
    (DATA / "stopwords.txt").write_text(
        "".join(w + "\n" for w in sorted(ENGLISH_STOP_WORDS)))
    rows = []
    for w in top_n_list("en", 20000):
        if w.isalpha() and w.isascii():
            rows.append((w, word_frequency(w, "en")))
        if len(rows) == 5000:
            break
    (DATA / "background_freq.tsv").write_text(
        "".join(f"{w}\t{f:.3e}\n" for w, f in rows))


if __name__ == "__main__":
    main()
