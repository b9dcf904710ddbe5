//! Subsets of a ring as bitmasks over local positions.

use std::cmp::Ordering;

/// Bit `p` set means the element at local position `p` is in the subset.
pub type Mask = u64;

pub fn full(n: usize) -> Mask {
    if n >= 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

/// Set positions in ascending order.
pub fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let p = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(p)
        }
    })
}

#[inline]
pub fn has(m: Mask, p: usize) -> bool {
    m >> p & 1 == 1
}

/// Lexicographic order of the ascending position lists.
pub fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    bits(a).cmp(bits(b))
}

/// Canonical order for lists of subsets: by size, then lexicographic.
pub fn size_lex_cmp(a: Mask, b: Mask) -> Ordering {
    a.count_ones()
        .cmp(&b.count_ones())
        .then_with(|| lex_cmp(a, b))
}

/// All submasks of `m`, including `0` and `m` itself.
pub fn submasks(m: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(m);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & m) };
        Some(cur)
    })
}
