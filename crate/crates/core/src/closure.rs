//! Classification of stable closures: the eleven-block poset of endpoint
//! constraints, canonical class descriptors, the invariant-based classifier,
//! and an independent brute-force closure oracle at bounded arity.

use crate::boolfn::{BoolFn, MinorMap, Signature};
use crate::error::{Error, Result};
use crate::stability::{FnClass, Provenance};
use serde::Serialize;
use std::sync::OnceLock;

/// One of the eleven endpoint-profile constraints, stored as a mask over the
/// four profiles `(f(0..0), f(1..1))`. Profile `(a, b)` is bit `a + 2b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Block(u8);

impl Block {
    pub const B00: Block = Block(0b0001);
    pub const B10: Block = Block(0b0010);
    pub const B01: Block = Block(0b0100);
    pub const B11: Block = Block(0b1000);
    pub const C0: Block = Block(0b0101);
    pub const C1: Block = Block(0b1010);
    pub const E0: Block = Block(0b0011);
    pub const E1: Block = Block(0b1100);
    pub const EQ: Block = Block(0b1001);
    pub const NEQ: Block = Block(0b0110);
    pub const ALL: Block = Block(0b1111);

    /// The four minimal blocks, then the six middle ones, then the top.
    pub const ALL_BLOCKS: [Block; 11] = [
        Block::B00,
        Block::B01,
        Block::B10,
        Block::B11,
        Block::C0,
        Block::C1,
        Block::E0,
        Block::E1,
        Block::EQ,
        Block::NEQ,
        Block::ALL,
    ];

    pub const MINIMAL: [Block; 4] = [Block::B00, Block::B01, Block::B10, Block::B11];
    pub const MIDDLE: [Block; 6] = [
        Block::C0,
        Block::C1,
        Block::E0,
        Block::E1,
        Block::EQ,
        Block::NEQ,
    ];

    fn profile_bit(c0: bool, c1: bool) -> u8 {
        1 << (c0 as u8 + 2 * c1 as u8)
    }

    pub fn from_profile(c0: bool, c1: bool) -> Block {
        Block(Self::profile_bit(c0, c1))
    }

    /// The minimal block containing a set of profiles (mask over profile
    /// bits): one profile gives the minimal block, two give the middle block
    /// covering both, three or more give the top.
    pub fn least_containing(profile_mask: u8) -> Option<Block> {
        match profile_mask.count_ones() {
            0 => None,
            1 | 2 => Some(Block(profile_mask)),
            _ => Some(Block::ALL),
        }
    }

    pub fn contains_profile(self, c0: bool, c1: bool) -> bool {
        self.0 & Self::profile_bit(c0, c1) != 0
    }

    pub fn is_subset(self, other: Block) -> bool {
        self.0 & !other.0 == 0
    }

    /// Intersection; `None` when the profile sets are disjoint. The mask of a
    /// nonempty intersection of valid blocks is always itself a valid block.
    pub fn meet(self, other: Block) -> Option<Block> {
        let m = self.0 & other.0;
        if m == 0 {
            None
        } else {
            Some(Block(m))
        }
    }

    /// Image under outer complementation: profile `(a, b)` maps to the
    /// complemented profile.
    pub fn complement(self) -> Block {
        let mut out = 0u8;
        for bit in 0..4 {
            if self.0 >> bit & 1 != 0 {
                out |= 1 << (3 - bit);
            }
        }
        Block(out)
    }

    pub fn name(self) -> &'static str {
        match self {
            Block::B00 => "B00",
            Block::B01 => "B01",
            Block::B10 => "B10",
            Block::B11 => "B11",
            Block::C0 => "C0",
            Block::C1 => "C1",
            Block::E0 => "E0",
            Block::E1 => "E1",
            Block::EQ => "EQ",
            Block::NEQ => "NEQ",
            Block::ALL => "ALL",
            _ => "?",
        }
    }

    pub fn from_name(name: &str) -> Option<Block> {
        Block::ALL_BLOCKS.iter().copied().find(|b| b.name() == name)
    }

    /// Notation fragment ("C0E0", "Even", ...); empty for the top.
    fn notation_fragment(self) -> &'static str {
        match self {
            Block::B00 => "C0E0",
            Block::B01 => "C0E1",
            Block::B10 => "C1E0",
            Block::B11 => "C1E1",
            Block::C0 => "C0",
            Block::C1 => "C1",
            Block::E0 => "E0",
            Block::E1 => "E1",
            Block::EQ => "Even",
            Block::NEQ => "Odd",
            _ => "",
        }
    }
}

impl std::fmt::Debug for Block {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A degree or characteristic-rank cap.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub enum Cap {
    Finite(u32),
    Infinite,
}

impl Cap {
    pub fn admits(self, v: u32) -> bool {
        match self {
            Cap::Finite(c) => v <= c,
            Cap::Infinite => true,
        }
    }

    fn min(self, other: Cap) -> Cap {
        if self <= other {
            self
        } else {
            other
        }
    }
}

/// Canonical name for a stable class. `Graded` always stores `1 <= xrk <=
/// deg` (with `xrk = deg` when the rank constraint is vacuous) and `deg >=
/// 1`; the four special forms cover the bottom of the lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum ClassDescriptor {
    Empty,
    Const0,
    Const1,
    AllConst,
    Graded { deg: Cap, xrk: Cap, block: Block },
}

impl ClassDescriptor {
    /// Normalizing constructor. A finite degree cap of 0 degenerates to the
    /// constant classes allowed by the block.
    pub fn graded(deg: Cap, xrk: Cap, block: Block) -> ClassDescriptor {
        if deg == Cap::Finite(0) {
            let has0 = block.contains_profile(false, false);
            let has1 = block.contains_profile(true, true);
            return match (has0, has1) {
                (true, true) => ClassDescriptor::AllConst,
                (true, false) => ClassDescriptor::Const0,
                (false, true) => ClassDescriptor::Const1,
                (false, false) => ClassDescriptor::Empty,
            };
        }
        let xrk = match xrk {
            Cap::Finite(x) => Cap::Finite(x.max(1)),
            Cap::Infinite => Cap::Infinite,
        };
        ClassDescriptor::Graded {
            deg,
            xrk: xrk.min(deg),
            block,
        }
    }

    /// Membership from the invariant tuple alone.
    pub fn member_sig(&self, sig: &Signature) -> bool {
        match self {
            ClassDescriptor::Empty => false,
            ClassDescriptor::AllConst => sig.degree == 0,
            ClassDescriptor::Const0 => sig.degree == 0 && !sig.c0,
            ClassDescriptor::Const1 => sig.degree == 0 && sig.c0,
            ClassDescriptor::Graded { deg, xrk, block } => {
                deg.admits(sig.degree)
                    && xrk.admits(sig.charrank)
                    && block.contains_profile(sig.c0, sig.c1)
            }
        }
    }

    pub fn member(&self, f: &BoolFn) -> bool {
        self.member_sig(&f.signature())
    }

    /// Set inclusion of the denoted classes, decided symbolically on the
    /// canonical forms.
    pub fn leq(&self, other: &ClassDescriptor) -> bool {
        use ClassDescriptor::*;
        match (self, other) {
            (Empty, _) => true,
            (_, Empty) => false,
            (Const0, Const0) | (Const1, Const1) => true,
            (Const0 | Const1 | AllConst, AllConst) => true,
            (Const0, Graded { block, .. }) => block.contains_profile(false, false),
            (Const1, Graded { block, .. }) => block.contains_profile(true, true),
            (AllConst, Graded { block, .. }) => {
                block.contains_profile(false, false) && block.contains_profile(true, true)
            }
            (Const0 | Const1 | AllConst, Const0 | Const1) => false,
            (Graded { .. }, Const0 | Const1 | AllConst) => false,
            (
                Graded {
                    deg: d1,
                    xrk: x1,
                    block: b1,
                },
                Graded {
                    deg: d2,
                    xrk: x2,
                    block: b2,
                },
            ) => d1 <= d2 && x1 <= x2 && b1.is_subset(*b2),
        }
    }

    /// Descriptor of the intersection.
    pub fn meet(&self, other: &ClassDescriptor) -> ClassDescriptor {
        use ClassDescriptor::*;
        match (*self, *other) {
            (Empty, _) | (_, Empty) => Empty,
            (Const0, Const1) | (Const1, Const0) => Empty,
            (Const0, Const0 | AllConst) | (AllConst, Const0) => Const0,
            (Const1, Const1 | AllConst) | (AllConst, Const1) => Const1,
            (AllConst, AllConst) => AllConst,
            (c @ (Const0 | Const1 | AllConst), Graded { block, .. })
            | (Graded { block, .. }, c @ (Const0 | Const1 | AllConst)) => {
                let has0 = block.contains_profile(false, false) && c != Const1;
                let has1 = block.contains_profile(true, true) && c != Const0;
                match (has0, has1) {
                    (true, true) => AllConst,
                    (true, false) => Const0,
                    (false, true) => Const1,
                    (false, false) => Empty,
                }
            }
            (
                Graded {
                    deg: d1,
                    xrk: x1,
                    block: b1,
                },
                Graded {
                    deg: d2,
                    xrk: x2,
                    block: b2,
                },
            ) => match b1.meet(b2) {
                None => Empty,
                Some(b) => ClassDescriptor::graded(d1.min(d2), x1.min(x2), b),
            },
        }
    }

    /// Image under outer complementation (`f` maps to `f + 1`): blocks swap
    /// complementary profiles, caps are unchanged.
    pub fn complement(&self) -> ClassDescriptor {
        use ClassDescriptor::*;
        match *self {
            Empty => Empty,
            AllConst => AllConst,
            Const0 => Const1,
            Const1 => Const0,
            Graded { deg, xrk, block } => Graded {
                deg,
                xrk,
                block: block.complement(),
            },
        }
    }

    /// Literature notation, e.g. "D3 ∩ X1 ∩ C0E0".
    pub fn canonical_name(&self) -> String {
        use ClassDescriptor::*;
        match self {
            Empty => "Empty".to_string(),
            Const0 => "D0 ∩ C0".to_string(),
            Const1 => "D0 ∩ C1".to_string(),
            AllConst => "D0".to_string(),
            Graded { deg, xrk, block } => {
                let mut parts = Vec::new();
                if let Cap::Finite(d) = deg {
                    parts.push(format!("D{d}"));
                }
                if let Cap::Finite(x) = xrk {
                    if *deg == Cap::Infinite || Cap::Finite(*x) < *deg {
                        parts.push(format!("X{x}"));
                    }
                }
                let frag = block.notation_fragment();
                if !frag.is_empty() {
                    parts.push(frag.to_string());
                }
                if parts.is_empty() {
                    "Omega".to_string()
                } else {
                    parts.join(" ∩ ")
                }
            }
        }
    }

    /// Parse the CLI class-name grammar: `&`-joined constraints among
    /// `Omega`, `Empty`, `D0`, `Dk:<n>`/`D:<n>`, `Xk:<n>`/`X:<n>`, and block
    /// names; e.g. `D:3&X:1&B01`.
    pub fn parse(input: &str) -> Result<ClassDescriptor> {
        let s = input.trim();
        let perr = |msg: String| Error::Parse { pos: 0, msg };
        if s == "Empty" {
            return Ok(ClassDescriptor::Empty);
        }
        let mut deg: Option<u32> = None;
        let mut xrk: Option<u32> = None;
        let mut block = Block::ALL;
        let mut d0 = false;
        for tok in s.split('&') {
            let tok = tok.trim();
            if tok == "Omega" {
                continue;
            }
            if tok == "D0" {
                d0 = true;
                continue;
            }
            if let Some(b) = Block::from_name(tok) {
                block = block
                    .meet(b)
                    .ok_or_else(|| perr(format!("empty block constraint at '{tok}'")))?;
                continue;
            }
            if let Some(v) = tok.strip_prefix("Dk:").or_else(|| tok.strip_prefix("D:")) {
                let v = v
                    .parse()
                    .map_err(|_| perr(format!("bad degree cap '{tok}'")))?;
                deg = Some(v);
                continue;
            }
            if let Some(v) = tok.strip_prefix("Xk:").or_else(|| tok.strip_prefix("X:")) {
                let v = v
                    .parse()
                    .map_err(|_| perr(format!("bad rank cap '{tok}'")))?;
                xrk = Some(v);
                continue;
            }
            return Err(perr(format!("unknown class token '{tok}'")));
        }
        if d0 {
            if deg.is_some() || xrk.is_some() {
                return Err(perr("D0 cannot be combined with cap constraints".into()));
            }
            return Ok(ClassDescriptor::graded(
                Cap::Finite(0),
                Cap::Finite(0),
                block,
            ));
        }
        Ok(ClassDescriptor::graded(
            deg.map_or(Cap::Infinite, Cap::Finite),
            xrk.map_or(Cap::Infinite, Cap::Finite),
            block,
        ))
    }
}

impl std::fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.canonical_name())
    }
}

/// Classify the stable closure of a finite generator set from invariants
/// alone: the least listed class containing every generator.
pub fn classify(gens: &[BoolFn]) -> ClassDescriptor {
    if gens.is_empty() {
        return ClassDescriptor::Empty;
    }
    let mut max_deg = 0;
    let mut max_xrk = 0;
    let mut profiles = 0u8;
    for g in gens {
        let sig = g.signature();
        max_deg = max_deg.max(sig.degree);
        max_xrk = max_xrk.max(sig.charrank);
        profiles |= 1 << (sig.c0 as u8 + 2 * sig.c1 as u8);
    }
    let block = Block::least_containing(profiles).expect("nonempty generator set");
    ClassDescriptor::graded(Cap::Finite(max_deg), Cap::Finite(max_xrk), block)
}

/// All canonical descriptors with caps up to the bounds: the four specials
/// plus every block combined with cap pairs `(i, j)`, `1 <= j <= i`, where
/// each cap is finite (within its bound) or infinite.
pub fn enumerate_descriptors(deg_bound: u32, char_bound: u32) -> Vec<ClassDescriptor> {
    let mut out = vec![
        ClassDescriptor::Empty,
        ClassDescriptor::Const0,
        ClassDescriptor::Const1,
        ClassDescriptor::AllConst,
    ];
    if deg_bound == 0 {
        return out;
    }
    let mut degs: Vec<Cap> = (1..=deg_bound).map(Cap::Finite).collect();
    degs.push(Cap::Infinite);
    for deg in degs {
        let mut xrks: Vec<Cap> = (1..=char_bound)
            .map(Cap::Finite)
            .filter(|x| *x <= deg)
            .collect();
        match deg {
            // xrk = deg is the canonical form of "no rank constraint"
            Cap::Finite(d) => {
                if d > char_bound {
                    xrks.push(Cap::Finite(d));
                }
            }
            Cap::Infinite => xrks.push(Cap::Infinite),
        }
        for xrk in xrks {
            for block in Block::ALL_BLOCKS {
                out.push(ClassDescriptor::Graded { deg, xrk, block });
            }
        }
    }
    out
}

/// Signature memo: the signatures of all functions of a small arity, indexed
/// by raw table.
pub fn sig_table(arity: usize) -> &'static [Signature] {
    static TABLES: OnceLock<[Vec<Signature>; 4]> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        let build = |n: usize| {
            (0..1u64 << (1 << n))
                .map(|raw| BoolFn::from_raw_table(n, raw).unwrap().signature())
                .collect::<Vec<_>>()
        };
        [build(1), build(2), build(3), build(4)]
    });
    &tables[arity - 1]
}

/// Maximum arity the signature memo covers.
pub const SIG_MEMO_CAP: usize = 4;

/// The least family containing the generators that is closed under all
/// minors with target arity <= `arity_cap` and under ternary sums of
/// equal-arity members.
///
/// Computed as the odd-sum span of the generators' minors in each arity
/// slice: the set of sums of an odd number of minors of generators, which is
/// exactly the closure (no higher-arity detour can add low-arity elements).
pub fn closure_oracle(gens: &[BoolFn], arity_cap: usize) -> Result<FnClass> {
    if arity_cap == 0 || arity_cap > 6 {
        return Err(Error::CapExceeded {
            requested: arity_cap,
            cap: 6,
        });
    }
    for g in gens {
        if g.arity() > arity_cap {
            return Err(Error::CapExceeded {
                requested: g.arity(),
                cap: arity_cap,
            });
        }
    }
    let mut slices: Vec<Vec<u64>> = Vec::with_capacity(arity_cap);
    for m in 1..=arity_cap {
        // all minors of all generators landing in arity m
        let mut offset: Option<u64> = None;
        let mut basis: Vec<u64> = Vec::new();
        for g in gens {
            let n = g.arity();
            let mut images = vec![1usize; n];
            loop {
                let sigma = MinorMap::new(n, m, &images)?;
                let v = g.minor(&sigma)?.raw_table();
                match offset {
                    None => offset = Some(v),
                    Some(o) => {
                        basis_insert(&mut basis, v ^ o);
                    }
                }
                // odometer over images
                let mut pos = 0;
                loop {
                    if pos == n {
                        break;
                    }
                    images[pos] += 1;
                    if images[pos] <= m {
                        break;
                    }
                    images[pos] = 1;
                    pos += 1;
                }
                if pos == n {
                    break;
                }
            }
        }
        match offset {
            None => slices.push(Vec::new()),
            Some(o) => {
                if basis.len() > 24 {
                    return Err(Error::SizeBound {
                        size: 1u64 << basis.len(),
                        bound: 1 << 24,
                    });
                }
                let mut slice = Vec::with_capacity(1 << basis.len());
                enumerate_span(&basis, o, &mut slice);
                slice.sort_unstable();
                slices.push(slice);
            }
        }
    }
    Ok(FnClass::from_raw_slices(
        arity_cap,
        slices,
        Provenance::Closure,
    ))
}

/// Insert into an XOR echelon basis; keeps vectors with distinct leading bits.
fn basis_insert(basis: &mut Vec<u64>, mut v: u64) -> bool {
    for &b in basis.iter() {
        v = v.min(v ^ b);
    }
    if v != 0 {
        basis.push(v);
        basis.sort_unstable_by(|a, b| b.cmp(a));
        true
    } else {
        false
    }
}

fn in_span(basis: &[u64], mut v: u64) -> bool {
    for &b in basis {
        v = v.min(v ^ b);
    }
    v == 0
}

fn enumerate_span(basis: &[u64], offset: u64, out: &mut Vec<u64>) {
    out.push(offset);
    for (i, &b) in basis.iter().enumerate() {
        for j in 0..out.len().min(1 << i) {
            let v = out[j] ^ b;
            out.push(v);
        }
    }
}

/// Check that a set of raw tables is closed under ternary sums (equivalently,
/// that it is an affine subspace over GF(2)).
pub fn is_triple_sum_closed(slice: &[u64]) -> bool {
    if slice.is_empty() {
        return true;
    }
    let o = slice[0];
    let mut basis = Vec::new();
    for &v in slice {
        basis_insert(&mut basis, v ^ o);
    }
    slice.len() == 1usize << basis.len() && slice.iter().all(|&v| in_span(&basis, v ^ o))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::monster;
    use crate::parse::parse_fn;

    fn f(s: &str) -> BoolFn {
        parse_fn(s).unwrap()
    }

    #[test]
    fn block_poset_shape() {
        for b in Block::MINIMAL {
            for c in Block::MINIMAL {
                if b != c {
                    assert!(b.meet(c).is_none());
                }
            }
        }
        // each middle block is the union of exactly two minimal ones
        for m in Block::MIDDLE {
            let covers: Vec<Block> = Block::MINIMAL
                .into_iter()
                .filter(|b| b.is_subset(m))
                .collect();
            assert_eq!(covers.len(), 2, "{}", m.name());
            assert_eq!(covers[0].0 | covers[1].0, m.0);
        }
    }

    #[test]
    fn descriptor_member_examples() {
        let ls = ClassDescriptor::graded(Cap::Finite(1), Cap::Finite(1), Block::NEQ);
        assert!(ls.member(&f("x1 + 1")));

        let w2 = monster(2).unwrap();
        let d = ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(1), Block::B00);
        assert!(d.member(&w2));

        assert!(!ClassDescriptor::Const0.member(&f("x1")));
        assert!(ClassDescriptor::Const0.member(&f("0@3")));
    }

    #[test]
    fn classify_named_families() {
        assert_eq!(
            classify(&[f("x1*x2*x3")]),
            ClassDescriptor::graded(Cap::Finite(3), Cap::Finite(3), Block::B01)
        );
        assert_eq!(
            classify(&[monster(2).unwrap()]),
            ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(1), Block::B00)
        );
        assert_eq!(
            classify(&[f("x1*x2 + x1")]),
            ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(2), Block::B00)
        );
        assert_eq!(
            classify(&[f("x1 + x2 + x3")]),
            ClassDescriptor::graded(Cap::Finite(1), Cap::Finite(1), Block::B01)
        );
        assert_eq!(classify(&[f("0"), f("1")]), ClassDescriptor::AllConst);
        assert_eq!(classify(&[]), ClassDescriptor::Empty);
    }

    #[test]
    fn meet_examples() {
        let c0 = ClassDescriptor::graded(Cap::Infinite, Cap::Infinite, Block::C0);
        let c1 = ClassDescriptor::graded(Cap::Infinite, Cap::Infinite, Block::C1);
        assert_eq!(c0.meet(&c1), ClassDescriptor::Empty);

        let x1neq = ClassDescriptor::graded(Cap::Infinite, Cap::Finite(1), Block::NEQ);
        let l = ClassDescriptor::graded(Cap::Finite(1), Cap::Finite(1), Block::ALL);
        assert_eq!(
            x1neq.meet(&l),
            ClassDescriptor::graded(Cap::Finite(1), Cap::Finite(1), Block::NEQ)
        );

        assert_eq!(x1neq.meet(&x1neq), x1neq);
    }

    #[test]
    fn leq_examples() {
        let lc = ClassDescriptor::graded(Cap::Finite(1), Cap::Finite(1), Block::B01);
        let s = ClassDescriptor::graded(Cap::Infinite, Cap::Finite(1), Block::NEQ);
        assert!(lc.leq(&s));

        let any_k = ClassDescriptor::graded(Cap::Finite(3), Cap::Finite(3), Block::EQ);
        assert!(ClassDescriptor::AllConst.leq(&any_k));

        let d2x1b00 = ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(1), Block::B00);
        let d2b01 = ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(2), Block::B01);
        assert!(!d2x1b00.leq(&d2b01));
    }

    #[test]
    fn descriptor_count_at_bounds() {
        assert_eq!(enumerate_descriptors(1, 1).len(), 37);
        assert_eq!(enumerate_descriptors(0, 0).len(), 4);
    }

    #[test]
    fn canonical_names() {
        assert_eq!(
            ClassDescriptor::graded(Cap::Finite(3), Cap::Finite(3), Block::B01).canonical_name(),
            "D3 ∩ C0E1"
        );
        assert_eq!(
            ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(1), Block::B00).canonical_name(),
            "D2 ∩ X1 ∩ C0E0"
        );
        assert_eq!(
            ClassDescriptor::graded(Cap::Infinite, Cap::Infinite, Block::ALL).canonical_name(),
            "Omega"
        );
        assert_eq!(ClassDescriptor::AllConst.canonical_name(), "D0");
        assert_eq!(
            ClassDescriptor::graded(Cap::Infinite, Cap::Finite(2), Block::NEQ).canonical_name(),
            "X2 ∩ Odd"
        );
    }

    #[test]
    fn class_grammar_round_trips() {
        for (src, expect) in [
            (
                "Omega",
                ClassDescriptor::graded(Cap::Infinite, Cap::Infinite, Block::ALL),
            ),
            ("Empty", ClassDescriptor::Empty),
            ("D0", ClassDescriptor::AllConst),
            ("D0&C0", ClassDescriptor::Const0),
            (
                "Dk:3",
                ClassDescriptor::graded(Cap::Finite(3), Cap::Finite(3), Block::ALL),
            ),
            (
                "Xk:2",
                ClassDescriptor::graded(Cap::Infinite, Cap::Finite(2), Block::ALL),
            ),
            (
                "D:3&X:1&B01",
                ClassDescriptor::graded(Cap::Finite(3), Cap::Finite(1), Block::B01),
            ),
            (
                "C0&E1",
                ClassDescriptor::graded(Cap::Infinite, Cap::Infinite, Block::B01),
            ),
        ] {
            assert_eq!(ClassDescriptor::parse(src).unwrap(), expect, "{src}");
        }
        assert!(ClassDescriptor::parse("B00&B11").is_err());
        assert!(ClassDescriptor::parse("Q7").is_err());
    }

    #[test]
    fn oracle_projection_generates_idempotent_linear() {
        let cls = closure_oracle(&[f("x1")], 3).unwrap();
        // odd-size XOR sums of variables, no constant term
        for n in 1..=3usize {
            let got = cls.slice(n);
            let lc = ClassDescriptor::graded(Cap::Finite(1), Cap::Finite(1), Block::B01);
            let want: Vec<u64> = (0..1u64 << (1 << n))
                .filter(|&raw| lc.member(&BoolFn::from_raw_table(n, raw).unwrap()))
                .collect();
            assert_eq!(got, &want[..], "arity {n}");
        }
    }

    #[test]
    fn oracle_empty_generators() {
        let cls = closure_oracle(&[], 3).unwrap();
        for n in 1..=3 {
            assert!(cls.slice(n).is_empty());
        }
    }

    #[test]
    fn oracle_rejects_oversized_generators() {
        assert!(matches!(
            closure_oracle(&[f("x1@4")], 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn oracle_monster_matches_descriptor() {
        let w2 = monster(2).unwrap();
        let cls = closure_oracle(std::slice::from_ref(&w2), 4).unwrap();
        let d = classify(&[w2]);
        for n in 1..=4usize {
            let sigs = sig_table(n);
            let want: Vec<u64> = (0..sigs.len() as u64)
                .filter(|&raw| d.member_sig(&sigs[raw as usize]))
                .collect();
            assert_eq!(cls.slice(n), &want[..], "arity {n}");
        }
    }

    #[test]
    fn complement_map() {
        let d = ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(1), Block::B00);
        assert_eq!(
            d.complement(),
            ClassDescriptor::graded(Cap::Finite(2), Cap::Finite(1), Block::B11)
        );
        assert_eq!(
            ClassDescriptor::Const0.complement(),
            ClassDescriptor::Const1
        );
        let eq = ClassDescriptor::graded(Cap::Infinite, Cap::Infinite, Block::EQ);
        assert_eq!(eq.complement(), eq);
    }
}
