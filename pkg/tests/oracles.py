"""Reference implementations that share no code with the package.

Braids act faithfully on the free group F_n (Artin's representation), so two
braid words are equal exactly when they induce the same automorphism. Curves
are compared through the conjugacy class of their boundary word.
"""
from __future__ import annotations


def reduce_word(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert_word(w):
    return tuple(-x for x in reversed(w))


def _substitute(images, w):
    out = []
    for x in w:
        out.extend(images[x - 1] if x > 0 else invert_word(images[-x - 1]))
    return reduce_word(out)


def _letter_images(strands, letter):
    i = abs(letter)
    imgs = [(j,) for j in range(1, strands + 1)]
    if letter > 0:
        imgs[i - 1] = (i, i + 1, -i)
        imgs[i] = (i,)
    else:
        imgs[i - 1] = (i + 1,)
        imgs[i] = (-(i + 1), i, i + 1)
    return imgs


def automorphism(strands, letters):
    """Images of x_1..x_n under the automorphism induced by the braid word."""
    images = [(j,) for j in range(1, strands + 1)]
    for x in letters:
        images = [_substitute(images, w) for w in _letter_images(strands, x)]
    return tuple(images)


def braid_equal(strands, u, v):
    return automorphism(strands, tuple(u)) == automorphism(strands, tuple(v))


def strand_permutation(strands, letters):
    """pi(j) = final position of the strand starting at position j."""
    at = list(range(1, strands + 1))  # at[p-1] = strand occupying position p
    for x in letters:
        i = abs(x)
        at[i - 1], at[i] = at[i], at[i - 1]
    final = {s: p + 1 for p, s in enumerate(at)}
    return tuple(final[j] for j in range(1, strands + 1))


def cyclic_class(w):
    """Canonical representative of the conjugacy class of a free-group word."""
    w = list(reduce_word(w))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    if not w:
        return ()
    return min(tuple(w[k:] + w[:k]) for k in range(len(w)))


def curve_class(strands, lo, hi, letters):
    """Boundary class of the round curve around punctures lo..hi+1 pushed by
    the braid word; orientation is forgotten."""
    phi = automorphism(strands, tuple(-x for x in reversed(letters)))
    boundary = _substitute(phi, tuple(range(lo, hi + 2)))
    return min(cyclic_class(boundary), cyclic_class(invert_word(boundary)))


def round_central_word(lo, hi):
    """sigma_lo when the curve surrounds two punctures, else the full twist
    on punctures lo..hi+1 spelled as a product of generators."""
    if lo == hi:
        return (lo,)
    half = []
    for top in range(hi, lo - 1, -1):
        half.extend(range(lo, top + 1))
    return tuple(half) * 2


def curves_disjoint(strands, c1, c2):
    """c = (lo, hi, letters). Distinct curves whose boundary twists commute."""
    if curve_class(strands, *c1) == curve_class(strands, *c2):
        return False
    z1 = _conj(round_central_word(c1[0], c1[1]), c1[2])
    z2 = _conj(round_central_word(c2[0], c2[1]), c2[2])
    return braid_equal(strands, z1 + z2, z2 + z1)


def _conj(z, w):
    w = tuple(w)
    return invert_word(w) + tuple(z) + w
