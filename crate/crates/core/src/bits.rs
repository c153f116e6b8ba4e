//! Packed bit-vector helpers for truth tables and ANF spectra.
//!
//! A table of an `n`-ary function is a vector of `2^n` bits stored LSB-first
//! in `u64` words: bit `b` is `f(b_1, ..., b_n)` where `b_1` is the least
//! significant bit of the index `b`.

/// Number of `u64` words needed to hold `2^arity` bits.
pub fn words_for(arity: usize) -> usize {
    if arity >= 6 {
        1 << (arity - 6)
    } else {
        1
    }
}

/// Mask selecting the valid bits of the last (only) word for small arities.
pub fn tail_mask(arity: usize) -> u64 {
    if arity >= 6 {
        u64::MAX
    } else {
        (1u64 << (1 << arity)) - 1
    }
}

pub fn get(words: &[u64], idx: u32) -> bool {
    words[(idx >> 6) as usize] >> (idx & 63) & 1 != 0
}

pub fn set(words: &mut [u64], idx: u32, value: bool) {
    let w = &mut words[(idx >> 6) as usize];
    if value {
        *w |= 1 << (idx & 63);
    } else {
        *w &= !(1 << (idx & 63));
    }
}

pub fn xor_assign(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

pub fn count_ones(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

/// Iterate the indices of set bits in ascending order.
pub fn iter_ones(words: &[u64]) -> impl Iterator<Item = u32> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros();
                w &= w - 1;
                Some((i as u32) << 6 | b)
            }
        })
    })
}

const LEVEL_MASK: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// In-place GF(2) Mobius transform (its own inverse): maps a truth table to
/// the ANF spectrum and back. After the transform, bit `S` is
/// `XOR_{T subset of S} input[T]`.
pub fn mobius_in_place(words: &mut [u64], arity: usize) {
    for (level, &mask) in LEVEL_MASK.iter().enumerate().take(arity) {
        let shift = 1 << level;
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for level in 6..arity {
        let block = 1usize << (level - 6);
        let mut i = 0;
        while i < words.len() {
            for j in 0..block {
                let low = words[i + j];
                words[i + block + j] ^= low;
            }
            i += 2 * block;
        }
    }
}

/// In-place superset XOR transform: bit `S` becomes `XOR_{T superset of S} input[T]`.
pub fn superset_xor_in_place(words: &mut [u64], arity: usize) {
    for (level, &mask) in LEVEL_MASK.iter().enumerate().take(arity) {
        let shift = 1 << level;
        for w in words.iter_mut() {
            *w ^= (*w >> shift) & mask;
        }
    }
    for level in 6..arity {
        let block = 1usize << (level - 6);
        let mut i = 0;
        while i < words.len() {
            for j in 0..block {
                let high = words[i + block + j];
                words[i + j] ^= high;
            }
            i += 2 * block;
        }
    }
}

/// Permute a table by XORing every index with `mask`: `out[b] = in[b ^ mask]`.
pub fn xor_permute(words: &[u64], arity: usize, mask: u32) -> Vec<u64> {
    let mut out = words.to_vec();
    for (level, &m) in LEVEL_MASK.iter().enumerate().take(arity) {
        if mask >> level & 1 != 0 {
            let shift = 1 << level;
            for w in out.iter_mut() {
                *w = (*w & m) << shift | (*w >> shift) & m;
            }
        }
    }
    for level in 6..arity {
        if mask >> level & 1 != 0 {
            let block = 1usize << (level - 6);
            let mut i = 0;
            while i < out.len() {
                for j in 0..block {
                    out.swap(i + j, i + block + j);
                }
                i += 2 * block;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_mobius(table: &[u64], arity: usize) -> Vec<u64> {
        let n = 1u32 << arity;
        let mut out = vec![0u64; words_for(arity)];
        for s in 0..n {
            let mut acc = false;
            // iterate subsets of s
            let mut t = s;
            loop {
                acc ^= get(table, t);
                if t == 0 {
                    break;
                }
                t = (t - 1) & s;
            }
            set(&mut out, s, acc);
        }
        out
    }

    #[test]
    fn mobius_matches_naive_subset_sum() {
        for arity in 1..=4 {
            let cases: Vec<u64> = match arity {
                1..=3 => (0..1u64 << (1 << arity)).collect(),
                _ => vec![0, 1, 0x6996, 0xdead, 0xffff, 0x8000],
            };
            for table in cases {
                let mut words = vec![table & tail_mask(arity)];
                let expect = naive_mobius(&words, arity);
                mobius_in_place(&mut words, arity);
                assert_eq!(words, expect, "arity {arity} table {table:#x}");
            }
        }
    }

    #[test]
    fn mobius_is_involution_at_arity_7() {
        let mut words: Vec<u64> = (0..2).map(|i| 0x0123_4567_89ab_cdef ^ i).collect();
        let orig = words.clone();
        mobius_in_place(&mut words, 7);
        assert_ne!(words, orig);
        mobius_in_place(&mut words, 7);
        assert_eq!(words, orig);
    }

    #[test]
    fn xor_permute_matches_pointwise() {
        for arity in [3usize, 7] {
            let words: Vec<u64> = (0..words_for(arity) as u64)
                .map(|i| 0x9e37_79b9_7f4a_7c15u64.wrapping_mul(i + 1))
                .map(|w| w & tail_mask(arity))
                .collect();
            for mask in [1u32, (1 << arity) - 1, 0b101 & ((1 << arity) - 1)] {
                let out = xor_permute(&words, arity, mask);
                for b in 0..1u32 << arity {
                    assert_eq!(get(&out, b), get(&words, b ^ mask));
                }
            }
        }
    }

    #[test]
    fn superset_transform_matches_naive() {
        let arity = 4;
        for table in [0x0123u64, 0x8001, 0x6996] {
            let words = vec![table];
            let mut got = words.clone();
            superset_xor_in_place(&mut got, arity);
            for s in 0..16u32 {
                let mut acc = false;
                for a in 0..16u32 {
                    if a & s == s && get(&words, a) {
                        acc = !acc;
                    }
                }
                assert_eq!(get(&got, s), acc, "s = {s:#b}");
            }
        }
    }
}
