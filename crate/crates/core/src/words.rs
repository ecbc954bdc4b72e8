// Word-slice kernels shared by elements, vectors and matrices. Every packed
// entry occupies `w` consecutive u64 words; bits beyond the atom count are
// always zero.

#[inline]
pub(crate) fn and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

#[inline]
pub(crate) fn or_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d |= s;
    }
}

#[inline]
pub(crate) fn or_and_assign(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, x), y) in dst.iter_mut().zip(a).zip(b) {
        *d |= x & y;
    }
}

#[inline]
pub(crate) fn is_zero(a: &[u64]) -> bool {
    a.iter().all(|&x| x == 0)
}

#[inline]
pub(crate) fn disjoint(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & y == 0)
}

#[inline]
pub(crate) fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Complement relative to `full`, the packed one of the algebra.
#[inline]
pub(crate) fn complement_into(dst: &mut [u64], a: &[u64], full: &[u64]) {
    for ((d, x), f) in dst.iter_mut().zip(a).zip(full) {
        *d = !x & f;
    }
}

#[inline]
pub(crate) fn and_not_assign(dst: &mut [u64], a: &[u64]) {
    for (d, x) in dst.iter_mut().zip(a) {
        *d &= !x;
    }
}
