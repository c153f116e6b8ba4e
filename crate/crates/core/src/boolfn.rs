//! Boolean functions as packed truth tables with a cached Zhegalkin (ANF) view.
//!
//! Index convention: the table bit at index `b` is `f(b_1, ..., b_n)` where
//! `b_1` is the least significant bit of `b` (argument `x1` is the LSB).
//! The ANF spectrum uses the same indexing: bit `S` of the spectrum is the
//! coefficient of the monomial `x_S`, with `S` read as a bit mask over
//! `{1, ..., n}` (bit `i-1` set iff `i` is in `S`; mask 0 is the constant
//! term).

use crate::bits;
use crate::error::{Error, Result};
use std::collections::BTreeSet;

/// Hard representation limit; exhaustive suites run far below this.
pub const MAX_ARITY: usize = 16;

/// An n-ary Boolean function. Immutable; both the truth table and the ANF
/// spectrum are stored, kept consistent by construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoolFn {
    arity: u8,
    table: Box<[u64]>,
    anf: Box<[u64]>,
}

impl std::fmt::Debug for BoolFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BoolFn({self})")
    }
}

fn check_arity(arity: usize) -> Result<()> {
    if arity == 0 || arity > MAX_ARITY {
        return Err(Error::ArityOutOfRange(arity));
    }
    Ok(())
}

impl BoolFn {
    fn from_table_words(arity: usize, table: Vec<u64>) -> Self {
        let mut anf = table.clone();
        bits::mobius_in_place(&mut anf, arity);
        BoolFn {
            arity: arity as u8,
            table: table.into_boxed_slice(),
            anf: anf.into_boxed_slice(),
        }
    }

    fn from_anf_words(arity: usize, anf: Vec<u64>) -> Self {
        let mut table = anf.clone();
        bits::mobius_in_place(&mut table, arity);
        BoolFn {
            arity: arity as u8,
            table: table.into_boxed_slice(),
            anf: anf.into_boxed_slice(),
        }
    }

    /// Build from a predicate over input points.
    pub fn from_fn(arity: usize, f: impl Fn(u32) -> bool) -> Result<Self> {
        check_arity(arity)?;
        let mut table = vec![0u64; bits::words_for(arity)];
        for b in 0..1u32 << arity {
            bits::set(&mut table, b, f(b));
        }
        Ok(Self::from_table_words(arity, table))
    }

    /// Build from a packed table; for arity <= 6 the table fits in one `u64`.
    pub fn from_raw_table(arity: usize, raw: u64) -> Result<Self> {
        check_arity(arity)?;
        if arity > 6 {
            return Err(Error::ArityOutOfRange(arity));
        }
        Ok(Self::from_table_words(
            arity,
            vec![raw & bits::tail_mask(arity)],
        ))
    }

    /// The packed table for arity <= 6.
    pub fn raw_table(&self) -> u64 {
        debug_assert!(self.arity <= 6);
        self.table[0]
    }

    /// Build from monomial masks (see module docs for the mask convention).
    pub fn from_monomial_masks(arity: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_arity(arity)?;
        let mut anf = vec![0u64; bits::words_for(arity)];
        let full = (1u32 << arity) - 1;
        for m in masks {
            if m & !full != 0 {
                return Err(Error::SubsetOutOfRange { mask: m, arity });
            }
            // repeated masks cancel over GF(2)
            let cur = bits::get(&anf, m);
            bits::set(&mut anf, m, !cur);
        }
        Ok(Self::from_anf_words(arity, anf))
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        check_arity(arity)?;
        let words = bits::words_for(arity);
        let fill = if value { bits::tail_mask(arity) } else { 0 };
        let table = vec![fill; words];
        Ok(Self::from_table_words(arity, table))
    }

    /// The i-th projection (1-based) of the given arity.
    pub fn projection(arity: usize, i: usize) -> Result<Self> {
        check_arity(arity)?;
        if i == 0 || i > arity {
            return Err(Error::IndexOutOfRange { index: i, arity });
        }
        Self::from_monomial_masks(arity, [1u32 << (i - 1)])
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn table_len(&self) -> u32 {
        1u32 << self.arity
    }

    pub fn eval(&self, point: u32) -> bool {
        bits::get(&self.table, point & (self.table_len() - 1))
    }

    pub fn anf_coeff(&self, mask: u32) -> bool {
        bits::get(&self.anf, mask)
    }

    pub fn table_words(&self) -> &[u64] {
        &self.table
    }

    /// Monomial masks in ascending mask order.
    pub fn monomial_masks(&self) -> impl Iterator<Item = u32> + '_ {
        bits::iter_ones(&self.anf)
    }

    pub fn monomials(&self) -> MonomialSet {
        MonomialSet {
            arity: self.arity,
            masks: self.monomial_masks().collect(),
        }
    }

    pub fn is_constant(&self) -> bool {
        self.monomial_masks().all(|m| m == 0)
    }

    /// Degree of the Zhegalkin polynomial; -1 for the zero polynomial.
    pub fn polydeg(&self) -> i32 {
        self.monomial_masks()
            .map(|m| m.count_ones() as i32)
            .max()
            .unwrap_or(-1)
    }

    /// Public degree: constants (including 0) have degree 0.
    pub fn degree(&self) -> u32 {
        self.polydeg().max(0) as u32
    }

    /// The minor `f_sigma` with `f_sigma(a_1..a_m) = f(a_{sigma(1)}..a_{sigma(n)})`.
    pub fn minor(&self, map: &MinorMap) -> Result<Self> {
        if map.source_arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: map.source_arity(),
            });
        }
        let m = map.target_arity();
        let mut table = vec![0u64; bits::words_for(m)];
        for b in 0..1u32 << m {
            let mut pre = 0u32;
            for (slot, &img) in map.images().iter().enumerate() {
                if b >> (img - 1) & 1 != 0 {
                    pre |= 1 << slot;
                }
            }
            bits::set(&mut table, b, self.eval(pre));
        }
        Ok(Self::from_table_words(m, table))
    }

    /// Pointwise XOR (GF(2) sum); monomial sets combine by symmetric difference.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: other.arity(),
            });
        }
        let mut table = self.table.to_vec();
        bits::xor_assign(&mut table, &other.table);
        Ok(Self::from_table_words(self.arity(), table))
    }

    /// Outer negation `f + 1`.
    pub fn outer_negation(&self) -> Self {
        let mask = bits::tail_mask(self.arity());
        let table = self.table.iter().map(|w| !w & mask).collect();
        Self::from_table_words(self.arity(), table)
    }

    /// Inner negation `f^n(a) = f(complement of a)`.
    pub fn inner_negation(&self) -> Self {
        let full = self.table_len() - 1;
        let table = bits::xor_permute(&self.table, self.arity(), full);
        Self::from_table_words(self.arity(), table)
    }

    /// Dual `f^d(a) = not f(complement of a)`.
    pub fn dual(&self) -> Self {
        self.inner_negation().outer_negation()
    }

    /// The outer negation, inner negation, and dual, in that order.
    pub fn negations(&self) -> (Self, Self, Self) {
        (self.outer_negation(), self.inner_negation(), self.dual())
    }

    /// 1-based indices of the essential arguments.
    pub fn essential_args(&self) -> Vec<usize> {
        (1..=self.arity())
            .filter(|&i| {
                let bit = 1u32 << (i - 1);
                (0..self.table_len()).any(|b| self.eval(b) != self.eval(b ^ bit))
            })
            .collect()
    }

    /// The function with fictitious arguments removed (argument order kept);
    /// constants reduce to arity 1.
    pub fn essential_form(&self) -> Self {
        let ess = self.essential_args();
        if ess.is_empty() {
            return Self::constant(1, self.eval(0)).unwrap();
        }
        let m = ess.len();
        Self::from_fn(m, |b| {
            let mut pre = 0u32;
            for (slot, &arg) in ess.iter().enumerate() {
                if b >> slot & 1 != 0 {
                    pre |= 1 << (arg - 1);
                }
            }
            self.eval(pre)
        })
        .unwrap()
    }

    /// Equality up to fictitious arguments. Structural equality requires
    /// equal arities; this is the coarser relation that identifies, e.g.,
    /// constants of different arities.
    pub fn equivalent_up_to_fictitious(&self, other: &Self) -> bool {
        self.essential_form() == other.essential_form()
    }

    pub fn is_reflexive(&self) -> bool {
        *self == self.inner_negation()
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.dual()
    }

    pub fn is_monotone(&self) -> bool {
        for i in 0..self.arity() {
            let bit = 1u32 << i;
            for b in 0..self.table_len() {
                if b & bit == 0 && self.eval(b) && !self.eval(b | bit) {
                    return false;
                }
            }
        }
        true
    }

    /// Characteristic of a set: the parity of the number of monomials that
    /// properly contain `s_mask`. Counted directly over the monomial set.
    pub fn characteristic(&self, s_mask: u32) -> Result<bool> {
        let full = (1u32 << self.arity) - 1;
        if s_mask & !full != 0 {
            return Err(Error::SubsetOutOfRange {
                mask: s_mask,
                arity: self.arity(),
            });
        }
        let count = self
            .monomial_masks()
            .filter(|&a| a != s_mask && a & s_mask == s_mask)
            .count();
        Ok(count % 2 == 1)
    }

    /// Characteristic rank: the least `m` such that every set of size >= `m`
    /// has characteristic 0. Computed from the definition via a superset
    /// parity transform of the spectrum.
    pub fn charrank(&self) -> u32 {
        let mut ch = self.anf.to_vec();
        bits::superset_xor_in_place(&mut ch, self.arity());
        // ch[S] now counts monomials A with A superset of S (including A = S);
        // drop the A = S term to get proper supersets only.
        bits::xor_assign(&mut ch, &self.anf);
        bits::iter_ones(&ch)
            .map(|s| s.count_ones() + 1)
            .max()
            .unwrap_or(0)
    }

    /// Parity: number of nonempty monomials mod 2.
    pub fn parity(&self) -> bool {
        (bits::count_ones(&self.anf) - self.anf_coeff(0) as u32) % 2 == 1
    }

    /// Endpoint profile `(f(0,...,0), f(1,...,1))`.
    pub fn profile(&self) -> (bool, bool) {
        (self.eval(0), self.eval(self.table_len() - 1))
    }

    pub fn signature(&self) -> Signature {
        let (c0, c1) = self.profile();
        Signature {
            degree: self.degree(),
            charrank: self.charrank(),
            parity: self.parity(),
            c0,
            c1,
        }
    }

    /// The formal derivative by argument `i`: strips `x_i` from the monomials
    /// containing it and drops the rest.
    pub fn derivative(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.arity() {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity(),
            });
        }
        let bit = 1u32 << (i - 1);
        let masks: Vec<u32> = self
            .monomial_masks()
            .filter(|&s| s & bit != 0)
            .map(|s| s & !bit)
            .collect();
        Self::from_monomial_masks(self.arity(), masks)
    }

    /// `f` with argument `i` negated.
    pub fn negate_argument(&self, i: usize) -> Result<Self> {
        if i == 0 || i > self.arity() {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity(),
            });
        }
        let bit = 1u32 << (i - 1);
        let table = bits::xor_permute(&self.table, self.arity(), bit);
        Ok(Self::from_table_words(self.arity(), table))
    }

    /// Mal'cev star composition: `g` feeds the first argument of `f`, the
    /// remaining arguments shift up. Result arity is `n + m - 1`.
    pub fn star(&self, g: &Self) -> Result<Self> {
        let n = self.arity();
        let m = g.arity();
        let out = n + m - 1;
        check_arity(out)?;
        let gm = (1u32 << m) - 1;
        let mut table = vec![0u64; bits::words_for(out)];
        for b in 0..1u32 << out {
            let first = g.eval(b & gm) as u32;
            let rest = b >> m;
            bits::set(&mut table, b, self.eval(first | rest << 1));
        }
        Ok(Self::from_table_words(out, table))
    }

    /// General composition `f(g_1, ..., g_n)` with inner functions of equal arity.
    pub fn compose(&self, inners: &[Self]) -> Result<Self> {
        if inners.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: inners.len(),
            });
        }
        let m = inners[0].arity();
        for g in inners {
            if g.arity() != m {
                return Err(Error::ArityMismatch {
                    expected: m,
                    got: g.arity(),
                });
            }
        }
        let mut table = vec![0u64; bits::words_for(m)];
        for b in 0..1u32 << m {
            let mut args = 0u32;
            for (slot, g) in inners.iter().enumerate() {
                args |= (g.eval(b) as u32) << slot;
            }
            bits::set(&mut table, b, self.eval(args));
        }
        Ok(Self::from_table_words(m, table))
    }
}

/// The monster function `W_k`: the `(k+1)`-ary function whose monomials are
/// all nonempty proper subsets of `{1, ..., k+1}`; equivalently the function
/// that is 1 everywhere except on the two constant tuples.
pub fn monster(k: usize) -> Result<BoolFn> {
    let arity = k + 1;
    check_arity(arity)?;
    let full = (1u32 << arity) - 1;
    BoolFn::from_fn(arity, |b| b != 0 && b != full)
}

/// `W_k` embedded into `target_arity` with its `k+1` essential arguments at
/// the (1-based) positions in `support`.
pub fn monster_embedded(k: usize, target_arity: usize, support: &[usize]) -> Result<BoolFn> {
    if support.len() != k + 1 {
        return Err(Error::BadSupport {
            expected: k + 1,
            got: support.len(),
        });
    }
    let w = monster(k)?;
    w.minor(&MinorMap::new(k + 1, target_arity, support)?)
}

/// A minor formation map `sigma: {1..n} -> {1..m}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorMap {
    target: u8,
    images: Vec<u8>,
}

impl MinorMap {
    /// `images[slot]` is the (1-based) image of argument `slot + 1`.
    pub fn new(source_arity: usize, target_arity: usize, images: &[usize]) -> Result<Self> {
        check_arity(source_arity)?;
        check_arity(target_arity)?;
        if images.len() != source_arity {
            return Err(Error::ArityMismatch {
                expected: source_arity,
                got: images.len(),
            });
        }
        for &img in images {
            if img == 0 || img > target_arity {
                return Err(Error::BadMinorMap {
                    image: img,
                    target: target_arity,
                });
            }
        }
        Ok(MinorMap {
            target: target_arity as u8,
            images: images.iter().map(|&i| i as u8).collect(),
        })
    }

    pub fn identity(arity: usize) -> Self {
        MinorMap {
            target: arity as u8,
            images: (1..=arity as u8).collect(),
        }
    }

    /// The identification map `sigma_{ij}: {1..n} -> {1..n-1}` that merges
    /// argument `j` into argument `i` (requires `i < j`).
    pub fn identify(arity: usize, i: usize, j: usize) -> Self {
        debug_assert!(1 <= i && i < j && j <= arity);
        let images = (1..=arity)
            .map(|s| {
                if s < j {
                    s as u8
                } else if s == j {
                    i as u8
                } else {
                    (s - 1) as u8
                }
            })
            .collect();
        MinorMap {
            target: (arity - 1) as u8,
            images,
        }
    }

    pub fn source_arity(&self) -> usize {
        self.images.len()
    }

    pub fn target_arity(&self) -> usize {
        self.target as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `tau . sigma` (apply `self` first, then `tau`).
    pub fn then(&self, tau: &MinorMap) -> Result<MinorMap> {
        if tau.source_arity() != self.target_arity() {
            return Err(Error::ArityMismatch {
                expected: self.target_arity(),
                got: tau.source_arity(),
            });
        }
        Ok(MinorMap {
            target: tau.target,
            images: self
                .images
                .iter()
                .map(|&i| tau.images[i as usize - 1])
                .collect(),
        })
    }

    /// Image of a monomial mask under the map.
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        for (slot, &img) in self.images.iter().enumerate() {
            if mask >> slot & 1 != 0 {
                out |= 1 << (img - 1);
            }
        }
        out
    }
}

/// The set of monomials of a Zhegalkin polynomial, as masks over `{1..n}`.
/// Mask 0 encodes the constant term 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    arity: u8,
    masks: BTreeSet<u32>,
}

impl MonomialSet {
    pub fn new(arity: usize, masks: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_arity(arity)?;
        let full = (1u32 << arity) - 1;
        let mut set = BTreeSet::new();
        for m in masks {
            if m & !full != 0 {
                return Err(Error::SubsetOutOfRange { mask: m, arity });
            }
            if !set.insert(m) {
                set.remove(&m);
            }
        }
        Ok(MonomialSet {
            arity: arity as u8,
            masks: set,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn masks(&self) -> impl Iterator<Item = u32> + '_ {
        self.masks.iter().copied()
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.masks.contains(&mask)
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    /// Reconstruct the function (inverse of `BoolFn::monomials`).
    pub fn to_fn(&self) -> BoolFn {
        BoolFn::from_monomial_masks(self.arity(), self.masks.iter().copied())
            .expect("masks validated on construction")
    }

    /// Minor formation on the monomial view: a target monomial is kept iff it
    /// has an odd number of preimages.
    pub fn minor(&self, map: &MinorMap) -> Result<MonomialSet> {
        if map.source_arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: map.source_arity(),
            });
        }
        MonomialSet::new(
            map.target_arity(),
            self.masks.iter().map(|&t| map.apply_mask(t)),
        )
    }

    /// Symmetric difference (the monomial view of pointwise XOR).
    pub fn sym_diff(&self, other: &MonomialSet) -> Result<MonomialSet> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: other.arity(),
            });
        }
        MonomialSet::new(
            self.arity(),
            self.masks.iter().chain(other.masks.iter()).copied(),
        )
    }
}

/// The invariant tuple that drives the closure classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub degree: u32,
    pub charrank: u32,
    pub parity: bool,
    pub c0: bool,
    pub c1: bool,
}

impl Signature {
    pub fn profile(&self) -> (bool, bool) {
        (self.c0, self.c1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_fn;

    fn f(s: &str) -> BoolFn {
        parse_fn(s).unwrap()
    }

    #[test]
    fn anf_of_named_functions() {
        // OR2, table 0111 in index order
        let or2 = BoolFn::from_raw_table(2, 0b1110).unwrap();
        let m: Vec<u32> = or2.monomial_masks().collect();
        assert_eq!(m, vec![0b01, 0b10, 0b11]);

        let zero2 = BoolFn::constant(2, false).unwrap();
        assert_eq!(zero2.monomial_masks().count(), 0);

        // median, table 00010111 in index order
        let mu = BoolFn::from_raw_table(3, 0b1110_1000).unwrap();
        let m: Vec<u32> = mu.monomial_masks().collect();
        assert_eq!(m, vec![0b011, 0b101, 0b110]);
    }

    #[test]
    fn minor_identification_and_fictitious() {
        // f = x1 x2, identify both arguments -> x1 (checked by evaluating f(a, a))
        let and2 = f("x1*x2");
        let sigma = MinorMap::new(2, 1, &[1, 1]).unwrap();
        let g = and2.minor(&sigma).unwrap();
        for a in 0..2u32 {
            assert_eq!(g.eval(a), and2.eval(a | a << 1));
        }
        assert_eq!(g, f("x1"));

        // identity map
        assert_eq!(and2.minor(&MinorMap::identity(2)).unwrap(), and2);

        // x1 x2 with sigma: 1 -> 2, 2 -> 3 becomes x2 x3
        let sigma = MinorMap::new(2, 3, &[2, 3]).unwrap();
        let g = and2.minor(&sigma).unwrap();
        for b in 0..8u32 {
            assert_eq!(g.eval(b), and2.eval((b >> 1 & 1) | (b >> 2 & 1) << 1));
        }
        assert_eq!(g, f("x2*x3"));
    }

    #[test]
    fn minor_arity_mismatch_is_error() {
        let and2 = f("x1*x2");
        let sigma = MinorMap::new(3, 3, &[1, 2, 3]).unwrap();
        assert!(matches!(
            and2.minor(&sigma),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn minor_monomials_matches_table_route() {
        // W2 under sigma_{2,3} -> monomials of W1 = {{1},{2}}
        let w2 = monster(2).unwrap();
        let sigma = MinorMap::identify(3, 2, 3);
        let via_masks = w2.monomials().minor(&sigma).unwrap();
        assert_eq!(via_masks, w2.minor(&sigma).unwrap().monomials());
        let m: Vec<u32> = via_masks.masks().collect();
        assert_eq!(m, vec![0b01, 0b10]);

        // empty set stays empty
        let empty = MonomialSet::new(2, []).unwrap();
        assert!(empty
            .minor(&MinorMap::identify(2, 1, 2))
            .unwrap()
            .is_empty());

        // x1 + x2 with both arguments identified cancels to 0
        let sum = f("x1 + x2").monomials();
        assert!(sum.minor(&MinorMap::identify(2, 1, 2)).unwrap().is_empty());
    }

    #[test]
    fn add_and_negations() {
        assert_eq!(f("x1*x2").add(&f("x1*x2 + x1")).unwrap(), f("x1@2"));
        assert_eq!(f("x1*x2 + 1").add(&f("x1 + x2")).unwrap(), {
            let or2 = BoolFn::from_raw_table(2, 0b1110).unwrap();
            or2.outer_negation()
        });
        let g = f("x1*x2 + x2");
        assert_eq!(g.add(&g).unwrap(), BoolFn::constant(2, false).unwrap());

        assert_eq!(f("x1*x2").inner_negation(), f("x1*x2 + x1 + x2 + 1"));
        let mu = BoolFn::from_raw_table(3, 0b1110_1000).unwrap();
        assert_eq!(mu.dual(), mu);
        assert_eq!(f("x1 + x2").inner_negation(), f("x1 + x2"));
    }

    #[test]
    fn characteristic_examples() {
        let and2 = f("x1*x2");
        assert!(and2.characteristic(0).unwrap());
        assert!(!and2.characteristic(0b11).unwrap());
        let w2 = monster(2).unwrap();
        assert!(!w2.characteristic(0b001).unwrap());
        assert!(w2.characteristic(0b111).is_ok());
        assert!(matches!(
            w2.characteristic(0b1111),
            Err(Error::SubsetOutOfRange { .. })
        ));
    }

    #[test]
    fn signature_examples() {
        let xor3 = f("x1 + x2 + x3");
        let sig = xor3.signature();
        assert_eq!(
            (sig.degree, sig.charrank, sig.parity, sig.c0, sig.c1),
            (1, 1, true, false, true)
        );

        let mu = BoolFn::from_raw_table(3, 0b1110_1000).unwrap();
        let sig = mu.signature();
        assert_eq!(
            (sig.degree, sig.charrank, sig.parity, sig.c0, sig.c1),
            (2, 1, true, false, true)
        );

        let and2 = f("x1*x2");
        let sig = and2.signature();
        assert_eq!(
            (sig.degree, sig.charrank, sig.parity, sig.c0, sig.c1),
            (2, 2, true, false, true)
        );
    }

    #[test]
    fn charrank_of_constants_is_zero() {
        for arity in 1..=3 {
            assert_eq!(BoolFn::constant(arity, false).unwrap().charrank(), 0);
            assert_eq!(BoolFn::constant(arity, true).unwrap().charrank(), 0);
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(f("x1*x2 + x1").derivative(1).unwrap(), f("x2 + 1"));
        assert_eq!(
            f("x2@2").derivative(1).unwrap(),
            BoolFn::constant(2, false).unwrap()
        );
        let w2 = monster(2).unwrap();
        let d = w2.derivative(3).unwrap();
        let m: Vec<u32> = d.monomial_masks().collect();
        assert_eq!(m, vec![0b000, 0b001, 0b010]);
        assert!(w2.derivative(5).is_err());
    }

    #[test]
    fn monster_small_cases() {
        assert_eq!(monster(1).unwrap(), f("x1 + x2"));
        assert_eq!(monster(0).unwrap(), BoolFn::constant(1, false).unwrap());
        let w2 = monster(2).unwrap();
        assert_eq!(w2, f("tt:0b01111110"));
        let sig = w2.signature();
        assert_eq!((sig.degree, sig.charrank), (2, 0));
        assert_eq!(sig.profile(), (false, false));
    }

    #[test]
    fn monster_embedding_checks_support() {
        assert!(monster_embedded(1, 4, &[2, 4]).is_ok());
        assert!(matches!(
            monster_embedded(1, 4, &[2]),
            Err(Error::BadSupport { .. })
        ));
        let w1_24 = monster_embedded(1, 4, &[2, 4]).unwrap();
        assert_eq!(w1_24, f("x2 + x4"));
    }

    #[test]
    fn star_examples() {
        // unary projection outer: x1 * g = g
        let g = f("x1*x2 + x3");
        assert_eq!(f("x1").star(&g).unwrap(), g);

        // (x1 + x2) * (x1 x2) = x1 x2 + x3
        assert_eq!(f("x1 + x2").star(&f("x1*x2")).unwrap(), f("x1*x2 + x3"));
    }

    #[test]
    fn fictitious_equivalence() {
        let c0_1 = BoolFn::constant(1, false).unwrap();
        let c0_3 = BoolFn::constant(3, false).unwrap();
        assert_ne!(c0_1, c0_3);
        assert!(c0_1.equivalent_up_to_fictitious(&c0_3));
        assert!(!c0_1.equivalent_up_to_fictitious(&BoolFn::constant(2, true).unwrap()));

        let padded = f("x1*x2@4");
        assert_eq!(padded.essential_args(), vec![1, 2]);
        assert!(padded.equivalent_up_to_fictitious(&f("x1*x2")));
        // permutation is not identified by this relation
        assert!(!f("x2 + x1*x2@3").equivalent_up_to_fictitious(&f("x1 + x1*x2@3")));
    }

    #[test]
    fn negate_argument_is_add_derivative() {
        // Spot-check of the Boolean derivative identity; the acceptance suite
        // sweeps this exhaustively.
        for s in ["x1*x2 + x1", "x1*x2*x3 + x2", "x1 + 1"] {
            let g = f(s);
            for i in 1..=g.arity() {
                assert_eq!(
                    g.negate_argument(i).unwrap(),
                    g.add(&g.derivative(i).unwrap()).unwrap()
                );
            }
        }
    }
}
