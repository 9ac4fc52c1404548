from hypothesis import strategies as st

from crprod.words import reduce

LETTERS2 = (24, -24, 25, -25)  # x, X, y, Y


def words(max_len=12, letters=LETTERS2, min_len=0):
    return st.lists(st.sampled_from(letters), min_size=min_len, max_size=max_len).map(tuple)


def reduced_words(max_len=12, letters=LETTERS2):
    return words(max_len, letters).map(reduce)
