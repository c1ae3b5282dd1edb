//! Combinatorial indexing for skew-symmetric tables.
//!
//! Trilinear brackets are stored on strictly increasing triples and wedge
//! arguments on strictly increasing pairs; these helpers provide the
//! lexicographic enumeration, the closed-form index of a sorted tuple, and
//! the sign of sorting an arbitrary tuple.

/// Number of unordered pairs `i < j` in `0..dim`.
pub fn pair_count(dim: usize) -> usize {
    dim * dim.saturating_sub(1) / 2
}

/// Number of strictly increasing triples in `0..dim`.
pub fn triple_count(dim: usize) -> usize {
    if dim < 3 {
        0
    } else {
        dim * (dim - 1) * (dim - 2) / 6
    }
}

/// Lexicographic index of the pair `(a, b)` with `a < b < dim`.
pub fn pair_index(dim: usize, a: usize, b: usize) -> usize {
    debug_assert!(a < b && b < dim);
    a * (2 * dim - a - 1) / 2 + (b - a - 1)
}

/// All pairs `a < b` in lexicographic order.
pub fn pairs(dim: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).flat_map(move |a| ((a + 1)..dim).map(move |b| (a, b)))
}

/// Lexicographic index of `(i, j, k)` with `i < j < k < dim`.
pub fn triple_index(dim: usize, i: usize, j: usize, k: usize) -> usize {
    debug_assert!(i < j && j < k && k < dim);
    let mut idx = 0;
    for a in 0..i {
        idx += pair_count(dim - 1 - a);
    }
    idx += pair_index(dim - 1 - i, j - i - 1, k - i - 1);
    idx
}

/// All triples `i < j < k` in lexicographic order.
pub fn triples(dim: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..dim)
        .flat_map(move |i| ((i + 1)..dim).flat_map(move |j| ((j + 1)..dim).map(move |k| (i, j, k))))
}

/// Sorts a pair, returning `None` on a repeat and the sign of the swap
/// otherwise.
pub fn sort_pair(a: usize, b: usize) -> Option<(i8, (usize, usize))> {
    use std::cmp::Ordering::*;
    match a.cmp(&b) {
        Less => Some((1, (a, b))),
        Greater => Some((-1, (b, a))),
        Equal => None,
    }
}

/// Sorts a triple, returning `None` on any repeat and the permutation sign
/// otherwise.
pub fn sort_triple(i: usize, j: usize, k: usize) -> Option<(i8, (usize, usize, usize))> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut sign = 1i8;
    // Three-element bubble sort; each swap flips the sign.
    for pass in 0..2 {
        for t in 0..(2 - pass) {
            if v[t] > v[t + 1] {
                v.swap(t, t + 1);
                sign = -sign;
            }
        }
    }
    Some((sign, (v[0], v[1], v[2])))
}

/// All `(block_a, block_b, sign)` shuffles of `0..a+b` into an increasing
/// block of length `a` and an increasing block of length `b`; the sign is
/// the signature of the permutation `[block_a..., block_b...]`.
pub fn shuffles(a: usize, b: usize) -> Vec<(Vec<usize>, Vec<usize>, i8)> {
    let n = a + b;
    let mut out = Vec::new();
    // Enumerate size-`a` first blocks as lexicographic combinations.
    let mut combo: Vec<usize> = (0..a).collect();
    loop {
        let mut in_first = vec![false; n];
        for &c in &combo {
            in_first[c] = true;
        }
        let block_b: Vec<usize> = (0..n).filter(|&x| !in_first[x]).collect();
        let mut perm = combo.clone();
        perm.extend(&block_b);
        out.push((combo.clone(), block_b, perm_sign(&perm)));
        // Advance to the next combination; stop when exhausted.
        let mut i = a;
        let advanced = loop {
            if i == 0 {
                break false;
            }
            i -= 1;
            if combo[i] < n - a + i {
                combo[i] += 1;
                for j in (i + 1)..a {
                    combo[j] = combo[j - 1] + 1;
                }
                break true;
            }
        };
        if !advanced {
            break;
        }
    }
    out
}

/// Signature of a permutation of `0..n` given as an array of images.
pub fn perm_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
