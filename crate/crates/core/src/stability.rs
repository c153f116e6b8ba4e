//! Function-class composition and bounded verification of stability under
//! right and left composition with the named clones.
//!
//! Verdict semantics are bounded: `HoldsUpToCap` means no counterexample was
//! found within the arity cap; `Fails` is definitive and carries a concrete
//! witness. Witness search is deterministic: outer-function arity ascending,
//! then inner arity, then lexicographic table order.

use crate::bits;
use crate::boolfn::{BoolFn, MinorMap};
use crate::clones::{CloneId, ALL_CLONES};
use crate::closure::{sig_table, Block, Cap, ClassDescriptor, SIG_MEMO_CAP};
use crate::error::{Error, Result};
use serde::Serialize;

// ---------------------------------------------------------------------------
// raw-table helpers (arity <= 6, table in one u64)

fn raw_eval(raw: u64, point: u32) -> bool {
    raw >> point & 1 != 0
}

fn raw_minor(raw: u64, source_arity: usize, images: &[usize], target_arity: usize) -> u64 {
    let mut out = 0u64;
    for b in 0..1u32 << target_arity {
        let mut pre = 0u32;
        for (slot, &img) in images.iter().enumerate().take(source_arity) {
            if b >> (img - 1) & 1 != 0 {
                pre |= 1 << slot;
            }
        }
        if raw_eval(raw, pre) {
            out |= 1 << b;
        }
    }
    out
}

fn raw_star(f: u64, n: usize, g: u64, m: usize) -> u64 {
    let out_arity = n + m - 1;
    let gm = (1u32 << m) - 1;
    let mut out = 0u64;
    for b in 0..1u32 << out_arity {
        let first = raw_eval(g, b & gm) as u32;
        let rest = b >> m;
        if raw_eval(f, first | rest << 1) {
            out |= 1 << b;
        }
    }
    out
}

fn raw_compose(g: u64, g_arity: usize, inners: &[u64], m: usize) -> u64 {
    let mut out = 0u64;
    for b in 0..1u32 << m {
        let mut args = 0u32;
        for (slot, &f) in inners.iter().enumerate().take(g_arity) {
            args |= (raw_eval(f, b) as u32) << slot;
        }
        if raw_eval(g, args) {
            out |= 1 << b;
        }
    }
    out
}

/// Advance a tuple of indices in lexicographic order (first coordinate most
/// significant). Returns false once the tuple wraps around.
fn next_tuple(idx: &mut [usize], radix: usize) -> bool {
    let mut pos = idx.len();
    loop {
        if pos == 0 {
            return false;
        }
        pos -= 1;
        idx[pos] += 1;
        if idx[pos] < radix {
            return true;
        }
        idx[pos] = 0;
    }
}

// ---------------------------------------------------------------------------
// FnClass

/// How a materialized class came to be.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Provenance {
    Descriptor(ClassDescriptor),
    CloneSlices(CloneId),
    Closure,
    AdHoc,
}

/// Per-arity sets of Boolean functions for arities `1..=cap`, stored as
/// sorted raw tables (so the cap is limited to arity 6).
#[derive(Debug, Clone)]
pub struct FnClass {
    cap: usize,
    slices: Vec<Vec<u64>>,
    bitmaps: Vec<Option<Vec<u64>>>,
    provenance: Provenance,
}

impl FnClass {
    pub fn from_raw_slices(cap: usize, mut slices: Vec<Vec<u64>>, provenance: Provenance) -> Self {
        assert!((1..=6).contains(&cap), "raw tables hold at most arity 6");
        slices.resize(cap, Vec::new());
        for slice in &mut slices {
            slice.sort_unstable();
            slice.dedup();
        }
        let bitmaps = slices
            .iter()
            .enumerate()
            .map(|(i, slice)| {
                let arity = i + 1;
                if arity > SIG_MEMO_CAP {
                    return None;
                }
                let words = (1usize << (1 << arity)).div_ceil(64);
                let mut bm = vec![0u64; words];
                for &raw in slice {
                    bm[(raw >> 6) as usize] |= 1 << (raw & 63);
                }
                Some(bm)
            })
            .collect();
        FnClass {
            cap,
            slices,
            bitmaps,
            provenance,
        }
    }

    /// Materialize all members of a descriptor class up to the cap.
    pub fn from_descriptor(d: &ClassDescriptor, cap: usize) -> Result<Self> {
        if cap == 0 || cap > SIG_MEMO_CAP {
            return Err(Error::CapExceeded {
                requested: cap,
                cap: SIG_MEMO_CAP,
            });
        }
        let slices = (1..=cap)
            .map(|n| {
                let sigs = sig_table(n);
                (0..sigs.len() as u64)
                    .filter(|&raw| d.member_sig(&sigs[raw as usize]))
                    .collect()
            })
            .collect();
        Ok(Self::from_raw_slices(
            cap,
            slices,
            Provenance::Descriptor(*d),
        ))
    }

    /// Materialize a clone's slices up to the cap.
    pub fn from_clone(c: CloneId, cap: usize) -> Result<Self> {
        let mut slices = Vec::new();
        for n in 1..=cap {
            slices.push(
                crate::clones::enumerate(c, n)?
                    .iter()
                    .map(|f| f.raw_table())
                    .collect(),
            );
        }
        Ok(Self::from_raw_slices(
            cap,
            slices,
            Provenance::CloneSlices(c),
        ))
    }

    pub fn from_members(cap: usize, members: impl IntoIterator<Item = BoolFn>) -> Result<Self> {
        let mut slices = vec![Vec::new(); cap];
        for f in members {
            if f.arity() > cap {
                return Err(Error::CapExceeded {
                    requested: f.arity(),
                    cap,
                });
            }
            slices[f.arity() - 1].push(f.raw_table());
        }
        Ok(Self::from_raw_slices(cap, slices, Provenance::AdHoc))
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn slice(&self, arity: usize) -> &[u64] {
        &self.slices[arity - 1]
    }

    pub fn contains_raw(&self, arity: usize, raw: u64) -> bool {
        if arity > self.cap {
            return false;
        }
        match &self.bitmaps[arity - 1] {
            Some(bm) => bm[(raw >> 6) as usize] >> (raw & 63) & 1 != 0,
            None => self.slices[arity - 1].binary_search(&raw).is_ok(),
        }
    }

    pub fn contains(&self, f: &BoolFn) -> bool {
        f.arity() <= self.cap && self.contains_raw(f.arity(), f.raw_table())
    }

    pub fn members(&self, arity: usize) -> impl Iterator<Item = BoolFn> + '_ {
        self.slices[arity - 1]
            .iter()
            .map(move |&raw| BoolFn::from_raw_table(arity, raw).unwrap())
    }

    pub fn len(&self, arity: usize) -> usize {
        self.slices[arity - 1].len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.iter().all(|s| s.is_empty())
    }

    pub fn same_slices(&self, other: &FnClass) -> bool {
        self.cap == other.cap && self.slices == other.slices
    }

    fn slice_is_full(&self, arity: usize) -> bool {
        self.slices[arity - 1].len() == 1usize << (1 << arity)
    }

    /// The block of a pure endpoint-profile class (no degree or rank cap).
    fn profile_block(&self) -> Option<Block> {
        match self.provenance {
            Provenance::Descriptor(ClassDescriptor::Graded {
                deg: Cap::Infinite,
                xrk: Cap::Infinite,
                block,
            }) => Some(block),
            _ => None,
        }
    }
}

/// Mal'cev star composition (re-exported from the function algebra).
pub fn star(f: &BoolFn, g: &BoolFn) -> Result<BoolFn> {
    f.star(g)
}

/// Class composition `{ f(g_1..g_n) | f in outer, g_i in inner }` over all
/// arities within the cap. Exhaustive; intended for small classes.
pub fn compose_classes(outer: &FnClass, inner: &FnClass, cap: usize) -> Result<FnClass> {
    let cap = cap.min(outer.cap()).min(inner.cap());
    let mut slices: Vec<std::collections::BTreeSet<u64>> = vec![Default::default(); cap];
    for n in 1..=cap {
        for &f in outer.slice(n) {
            for m in 1..=cap {
                let inner_slice = inner.slice(m);
                if inner_slice.is_empty() {
                    continue;
                }
                let mut idx = vec![0usize; n];
                loop {
                    let tuple: Vec<u64> = idx.iter().map(|&i| inner_slice[i]).collect();
                    slices[m - 1].insert(raw_compose(f, n, &tuple, m));
                    if !next_tuple(&mut idx, inner_slice.len()) {
                        break;
                    }
                }
            }
        }
    }
    Ok(FnClass::from_raw_slices(
        cap,
        slices
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect(),
        Provenance::AdHoc,
    ))
}

// ---------------------------------------------------------------------------
// verdicts and witnesses

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// `f` restricted by the minor map leaves the class.
    MinorEscape {
        f: String,
        images: Vec<usize>,
        target_arity: usize,
        result: String,
    },
    /// `f * g` leaves the class (right composition).
    StarEscape {
        f: String,
        g: String,
        result: String,
    },
    /// `g(args...)` leaves the class (left composition).
    ComposeEscape {
        g: String,
        args: Vec<String>,
        result: String,
    },
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::MinorEscape {
                f: func,
                images,
                target_arity,
                result,
            } => write!(
                f,
                "minor of {func} via {images:?} into arity {target_arity} gives {result}"
            ),
            Witness::StarEscape { f: func, g, result } => {
                write!(f, "({func}) * ({g}) = {result}")
            }
            Witness::ComposeEscape { g, args, result } => {
                write!(f, "({g})({}) = {result}", args.join(", "))
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    HoldsUpToCap { cap: usize },
    Fails { witness: Witness },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsUpToCap { .. })
    }
}

fn fn_str(arity: usize, raw: u64) -> String {
    crate::parse::print_fn(&BoolFn::from_raw_table(arity, raw).unwrap())
}

// ---------------------------------------------------------------------------
// right stability

/// Bounded right-stability check per the generator criterion: the class must
/// be minor-closed within the cap and closed under `f * g` for every member
/// `f` and basis element `g` of the clone whenever the result arity fits.
pub fn right_stable(k: &FnClass, clone: CloneId) -> Verdict {
    let cap = k.cap();
    // (a) minor closedness, via the elementary maps that generate all minor
    // formation maps within the cap: identifications, adjacent
    // transpositions, and the introduction of a fictitious last argument.
    for n in 1..=cap {
        if k.len(n) == 0 {
            continue;
        }
        let mut maps: Vec<(usize, Vec<usize>)> = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                let m = MinorMap::identify(n, i, j);
                maps.push((n - 1, m.images().iter().map(|&x| x as usize).collect()));
            }
        }
        for i in 1..n {
            let mut images: Vec<usize> = (1..=n).collect();
            images.swap(i - 1, i);
            maps.push((n, images));
        }
        if n < cap {
            maps.push((n + 1, (1..=n).collect()));
        }
        for &f in k.slice(n) {
            for (target, images) in &maps {
                if k.slice_is_full(*target) {
                    continue;
                }
                let r = raw_minor(f, n, images, *target);
                if !k.contains_raw(*target, r) {
                    return Verdict::Fails {
                        witness: Witness::MinorEscape {
                            f: fn_str(n, f),
                            images: images.clone(),
                            target_arity: *target,
                            result: fn_str(*target, r),
                        },
                    };
                }
            }
        }
    }
    // (b) star compositions with the basis
    let basis = clone.stability_basis();
    for n in 1..=cap {
        for m in 1..=cap {
            if n + m - 1 > cap {
                continue;
            }
            for &f in k.slice(n) {
                for g in basis.iter().filter(|g| g.arity() == m) {
                    let out_arity = n + m - 1;
                    if k.slice_is_full(out_arity) {
                        continue;
                    }
                    let r = raw_star(f, n, g.raw_table(), m);
                    if !k.contains_raw(out_arity, r) {
                        return Verdict::Fails {
                            witness: Witness::StarEscape {
                                f: fn_str(n, f),
                                g: crate::parse::print_fn(g),
                                result: fn_str(out_arity, r),
                            },
                        };
                    }
                }
            }
        }
    }
    Verdict::HoldsUpToCap { cap }
}

// ---------------------------------------------------------------------------
// left stability

struct LinearShape {
    constant: bool,
    essential: Vec<usize>, // 0-based slots
}

fn linear_shape(g: &BoolFn) -> Option<LinearShape> {
    if g.polydeg() > 1 {
        return None;
    }
    let mut essential = Vec::new();
    let mut constant = false;
    for mask in g.monomial_masks() {
        if mask == 0 {
            constant = true;
        } else {
            essential.push(mask.trailing_zeros() as usize);
        }
    }
    Some(LinearShape {
        constant,
        essential,
    })
}

fn xor_basis_insert(basis: &mut Vec<u64>, mut v: u64) {
    for &b in basis.iter() {
        v = v.min(v ^ b);
    }
    if v != 0 {
        basis.push(v);
        basis.sort_unstable_by(|a, b| b.cmp(a));
    }
}

fn xor_basis_contains(basis: &[u64], mut v: u64) -> bool {
    for &b in basis {
        v = v.min(v ^ b);
    }
    v == 0
}

/// Bounded left-stability check per the generator criterion: closure of the
/// class under `g(f_1..f_k)` for every basis element `g` of the clone over
/// all equal-arity argument tuples within the cap.
pub fn left_stable(k: &FnClass, clone: CloneId) -> Verdict {
    let cap = k.cap();
    let basis = clone.stability_basis();
    for g in &basis {
        let kk = g.arity();
        let graw = g.raw_table();
        if CloneId::Ic.member(g) {
            continue; // projections reproduce a member
        }
        for m in 1..=cap {
            let slice = k.slice(m);
            if slice.is_empty() || k.slice_is_full(m) {
                continue;
            }
            let escape = if let Some(block) = k.profile_block() {
                left_check_profile(k, block, g, m)
            } else if let Some(shape) = linear_shape(g) {
                left_check_linear(k, g, &shape, m)
            } else {
                left_check_scan(k, g, m)
            };
            if let Some(args) = escape {
                let r = raw_compose(graw, kk, &args, m);
                return Verdict::Fails {
                    witness: Witness::ComposeEscape {
                        g: crate::parse::print_fn(g),
                        args: args.iter().map(|&a| fn_str(m, a)).collect(),
                        result: fn_str(m, r),
                    },
                };
            }
        }
    }
    Verdict::HoldsUpToCap { cap }
}

/// Exact check for pure profile classes: the composed profile depends only
/// on the argument profiles, so it suffices to scan profile tuples with one
/// representative function per profile.
fn left_check_profile(k: &FnClass, block: Block, g: &BoolFn, m: usize) -> Option<Vec<u64>> {
    let slice = k.slice(m);
    // representative per profile, in (c0 + 2*c1) index order
    let mut reps: [Option<u64>; 4] = [None; 4];
    for &f in slice {
        let c0 = f & 1 != 0;
        let c1 = f >> ((1 << m) - 1) & 1 != 0;
        let idx = c0 as usize + 2 * c1 as usize;
        if reps[idx].is_none() {
            reps[idx] = Some(f);
        }
        if reps.iter().all(|r| r.is_some()) {
            break;
        }
    }
    let present: Vec<usize> = (0..4).filter(|&i| reps[i].is_some()).collect();
    let kk = g.arity();
    let mut idx = vec![0usize; kk];
    loop {
        let mut bits0 = 0u32;
        let mut bits1 = 0u32;
        for (slot, &i) in idx.iter().enumerate() {
            let p = present[i];
            bits0 |= ((p & 1) as u32) << slot;
            bits1 |= ((p >> 1) as u32) << slot;
        }
        if !block.contains_profile(g.eval(bits0), g.eval(bits1)) {
            return Some(idx.iter().map(|&i| reps[present[i]].unwrap()).collect());
        }
        if !next_tuple(&mut idx, present.len()) {
            return None;
        }
    }
}

/// Exact check for linear basis operations, using the affine structure of
/// the slice: a slice closed under a sum of two or more arguments must be an
/// affine subspace, and then the image is a coset that either lies inside
/// the slice or misses it at an explicitly constructible point.
fn left_check_linear(k: &FnClass, g: &BoolFn, shape: &LinearShape, m: usize) -> Option<Vec<u64>> {
    let slice = k.slice(m);
    let kk = g.arity();
    let full = bits::tail_mask(m);
    let cvec = if shape.constant { full } else { 0 };
    let t = shape.essential.len();
    match t {
        0 => {
            if k.contains_raw(m, cvec) {
                None
            } else {
                Some(vec![slice[0]; kk])
            }
        }
        1 => {
            // g = x_i (+ 1); the pure projection case was skipped earlier
            for &f in slice {
                if !k.contains_raw(m, f ^ cvec) {
                    return Some(vec![f; kk]);
                }
            }
            None
        }
        _ => {
            let f0 = slice[0];
            let mut basis: Vec<u64> = Vec::new();
            for &f in slice {
                xor_basis_insert(&mut basis, f ^ f0);
            }
            let affine = slice.len() == 1usize << basis.len();
            if affine {
                let z = cvec ^ if t % 2 == 1 { f0 } else { 0 };
                if xor_basis_contains(&basis, z ^ f0) {
                    None
                } else {
                    Some(vec![f0; kk])
                }
            } else {
                // a violating pair must exist; find the least one
                let extra = if t % 2 == 1 { f0 } else { 0 };
                for &u in slice {
                    for &v in slice {
                        let r = cvec ^ u ^ v ^ extra;
                        if !k.contains_raw(m, r) {
                            let mut args = vec![f0; kk];
                            args[shape.essential[0]] = u;
                            args[shape.essential[1]] = v;
                            return Some(args);
                        }
                    }
                }
                unreachable!("non-affine slice must violate a binary sum");
            }
        }
    }
}

/// Exhaustive tuple scan with early exit, in lexicographic table order.
fn left_check_scan(k: &FnClass, g: &BoolFn, m: usize) -> Option<Vec<u64>> {
    let slice = k.slice(m);
    let kk = g.arity();
    let graw = g.raw_table();
    let mut idx = vec![0usize; kk];
    let mut args = vec![0u64; kk];
    loop {
        for (slot, &i) in idx.iter().enumerate() {
            args[slot] = slice[i];
        }
        let r = raw_compose(graw, kk, &args, m);
        if !k.contains_raw(m, r) {
            return Some(args);
        }
        if !next_tuple(&mut idx, slice.len()) {
            return None;
        }
    }
}

// ---------------------------------------------------------------------------
// Table 3

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    Right,
    Left,
}

/// One instantiated row of the stability table: a class descriptor together
/// with the prescribed maximal clones for right and left composition.
#[derive(Debug, Clone, Serialize)]
pub struct Table3Row {
    pub name: String,
    pub descriptor: ClassDescriptor,
    pub right_max: CloneId,
    pub left_max: CloneId,
}

fn row(d: ClassDescriptor, right_max: CloneId, left_max: CloneId) -> Table3Row {
    Table3Row {
        name: d.canonical_name(),
        descriptor: d,
        right_max,
        left_max,
    }
}

fn t_of(a: bool) -> CloneId {
    if a {
        CloneId::T1
    } else {
        CloneId::T0
    }
}

fn l_of(a: bool) -> CloneId {
    if a {
        CloneId::L1
    } else {
        CloneId::L0
    }
}

fn block_c(a: bool) -> Block {
    if a {
        Block::C1
    } else {
        Block::C0
    }
}

fn block_e(b: bool) -> Block {
    if b {
        Block::E1
    } else {
        Block::E0
    }
}

fn block_b(a: bool, b: bool) -> Block {
    Block::from_profile(a, b)
}

/// The stability table, instantiated with all parameter values up to
/// `max_param` (degree/rank parameters `k` and `i > j >= 1`).
pub fn table3_rows(max_param: u32) -> Vec<Table3Row> {
    use Block as B;
    use Cap::{Finite as F, Infinite as Inf};
    use CloneId::*;
    let g = ClassDescriptor::graded;
    let bools = [false, true];
    let mut rows = Vec::new();

    rows.push(row(g(Inf, Inf, B::ALL), Omega, Omega));
    for a in bools {
        rows.push(row(g(Inf, Inf, block_c(a)), T0, t_of(a)));
    }
    for a in bools {
        rows.push(row(g(Inf, Inf, block_e(a)), T1, t_of(a)));
    }
    rows.push(row(g(Inf, Inf, B::EQ), Tc, Omega));
    rows.push(row(g(Inf, Inf, B::NEQ), Tc, S));
    for a in bools {
        for b in bools {
            let left = if a == b { t_of(a) } else { Tc };
            rows.push(row(g(Inf, Inf, block_b(a, b)), Tc, left));
        }
    }

    for k in 1..=max_param {
        let ge2 = k >= 2;
        rows.push(row(g(Inf, F(k), B::ALL), if ge2 { LS } else { S }, L));
        for a in bools {
            rows.push(row(
                g(Inf, F(k), block_c(a)),
                if ge2 { Lc } else { Sc },
                l_of(a),
            ));
            rows.push(row(
                g(Inf, F(k), block_e(a)),
                if ge2 { Lc } else { Sc },
                l_of(a),
            ));
        }
        rows.push(row(
            g(Inf, F(k), B::EQ),
            if ge2 { Lc } else { S },
            if ge2 { L } else { Omega },
        ));
        rows.push(row(
            g(Inf, F(k), B::NEQ),
            if ge2 { Lc } else { S },
            if ge2 { LS } else { S },
        ));
        for a in bools {
            for b in bools {
                let right = if ge2 { Lc } else { Sc };
                let left = if ge2 {
                    if a == b {
                        l_of(a)
                    } else {
                        Lc
                    }
                } else if a == b {
                    t_of(a)
                } else {
                    Sc
                };
                rows.push(row(g(Inf, F(k), block_b(a, b)), right, left));
            }
        }
    }

    for k in 1..=max_param {
        let ge2 = k >= 2;
        rows.push(row(g(F(k), F(k), B::ALL), L, L));
        for a in bools {
            rows.push(row(g(F(k), F(k), block_c(a)), L0, l_of(a)));
            rows.push(row(g(F(k), F(k), block_e(a)), L1, l_of(a)));
        }
        rows.push(row(g(F(k), F(k), B::EQ), if ge2 { Lc } else { LS }, L));
        rows.push(row(g(F(k), F(k), B::NEQ), if ge2 { Lc } else { LS }, LS));
        for a in bools {
            for b in bools {
                let left = if a == b { l_of(a) } else { Lc };
                rows.push(row(g(F(k), F(k), block_b(a, b)), Lc, left));
            }
        }
    }

    for i in 2..=max_param {
        for j in 1..i {
            let jge2 = j >= 2;
            rows.push(row(g(F(i), F(j), B::ALL), LS, L));
            for a in bools {
                rows.push(row(g(F(i), F(j), block_c(a)), Lc, l_of(a)));
                rows.push(row(g(F(i), F(j), block_e(a)), Lc, l_of(a)));
            }
            rows.push(row(g(F(i), F(j), B::EQ), if jge2 { Lc } else { LS }, L));
            rows.push(row(g(F(i), F(j), B::NEQ), if jge2 { Lc } else { LS }, LS));
            for a in bools {
                for b in bools {
                    let left = if a == b { l_of(a) } else { Lc };
                    rows.push(row(g(F(i), F(j), block_b(a, b)), Lc, left));
                }
            }
        }
    }

    rows.push(row(ClassDescriptor::AllConst, Omega, Omega));
    for a in bools {
        let d = if a {
            ClassDescriptor::Const1
        } else {
            ClassDescriptor::Const0
        };
        rows.push(row(d, Omega, t_of(a)));
    }
    rows.push(row(ClassDescriptor::Empty, Omega, Omega));
    rows
}

/// One verification record: a class instance, a clone, a side, the verdict,
/// and whether it matches the expectation derived from the table.
#[derive(Debug, Clone, Serialize)]
pub struct StabilityRecord {
    pub class: String,
    pub clone: CloneId,
    pub side: Side,
    pub expected_holds: bool,
    pub verdict: Verdict,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table3Report {
    pub cap: usize,
    pub max_param: u32,
    pub rows: usize,
    pub records: Vec<StabilityRecord>,
    pub ok: bool,
}

impl Table3Report {
    pub fn mismatches(&self) -> impl Iterator<Item = &StabilityRecord> {
        self.records.iter().filter(|r| !r.matches)
    }
}

/// Verify every instantiated row of the stability table against every named
/// clone on both sides. A row passes when the prescribed maximum Holds and
/// every clone not below the maximum Fails with a witness.
///
/// `inject_fault` swaps one row's prescribed clone, as a negative control
/// that must drive the report (and the CLI exit status) to failure.
pub fn verify_table3(max_param: u32, cap: usize, inject_fault: bool) -> Result<Table3Report> {
    if max_param == 0 || max_param as usize >= cap {
        return Err(Error::CapExceeded {
            requested: max_param as usize + 1,
            cap,
        });
    }
    let mut rows = table3_rows(max_param);
    if inject_fault {
        rows[0].right_max = CloneId::Lc;
    }
    let mut records = Vec::new();
    for r in &rows {
        let class = FnClass::from_descriptor(&r.descriptor, cap)?;
        for c in ALL_CLONES {
            let expected = r.right_max.includes(c);
            let verdict = right_stable(&class, c);
            let matches = expected == verdict.holds();
            records.push(StabilityRecord {
                class: r.name.clone(),
                clone: c,
                side: Side::Right,
                expected_holds: expected,
                verdict,
                matches,
            });
        }
        for c in ALL_CLONES {
            let expected = r.left_max.includes(c);
            let verdict = left_stable(&class, c);
            let matches = expected == verdict.holds();
            records.push(StabilityRecord {
                class: r.name.clone(),
                clone: c,
                side: Side::Left,
                expected_holds: expected,
                verdict,
                matches,
            });
        }
    }
    let ok = records.iter().all(|r| r.matches);
    Ok(Table3Report {
        cap,
        max_param,
        rows: rows.len(),
        records,
        ok,
    })
}
