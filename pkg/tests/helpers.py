from fractions import Fraction


def Q(*values) -> tuple[Fraction, ...]:
    """把 int / 'p/q' 字串轉成 Fraction tuple"""
    return tuple(Fraction(v) for v in values)
