//! Operations on GF(p) for small primes: value tables, unique reduced
//! polynomials (no exponent above p-1), degree, and the bounded closure
//! under composition with linear functions on both sides.

use crate::error::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;

pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

/// Hard bound on table size p^n.
pub const TABLE_BOUND: u64 = 4096;

fn check_prime(p: u32) -> Result<()> {
    if SUPPORTED_PRIMES.contains(&p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn pow(p: u64, n: usize) -> u64 {
    p.pow(n as u32)
}

/// An n-ary operation on GF(p): a value table in mixed-radix order (digit 1
/// of the index is argument x1) together with the coefficients of its
/// reduced polynomial, kept consistent by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GFpFn {
    p: u32,
    arity: u8,
    values: Vec<u8>,
    coeffs: Vec<u8>, // same indexing: exponent vector as mixed-radix index
}

impl GFpFn {
    pub fn from_values(p: u32, arity: usize, values: Vec<u8>) -> Result<Self> {
        check_prime(p)?;
        if arity == 0 || arity > crate::MAX_ARITY {
            return Err(Error::ArityOutOfRange(arity));
        }
        let size = pow(p as u64, arity);
        if size > TABLE_BOUND {
            return Err(Error::SizeBound {
                size,
                bound: TABLE_BOUND,
            });
        }
        if values.len() as u64 != size {
            return Err(Error::ArityMismatch {
                expected: size as usize,
                got: values.len(),
            });
        }
        if values.iter().any(|&v| v as u32 >= p) {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("value out of range mod {p}"),
            });
        }
        let coeffs = interpolate(&values, p, arity);
        Ok(GFpFn {
            p,
            arity: arity as u8,
            values,
            coeffs,
        })
    }

    pub fn from_coeffs(p: u32, arity: usize, coeffs: Vec<u8>) -> Result<Self> {
        check_prime(p)?;
        if arity == 0 || arity > crate::MAX_ARITY {
            return Err(Error::ArityOutOfRange(arity));
        }
        let size = pow(p as u64, arity);
        if size > TABLE_BOUND {
            return Err(Error::SizeBound {
                size,
                bound: TABLE_BOUND,
            });
        }
        if coeffs.len() as u64 != size {
            return Err(Error::ArityMismatch {
                expected: size as usize,
                got: coeffs.len(),
            });
        }
        let values = evaluate_all(&coeffs, p, arity);
        Ok(GFpFn {
            p,
            arity: arity as u8,
            values,
            coeffs,
        })
    }

    pub fn constant(p: u32, arity: usize, c: u8) -> Result<Self> {
        let size = pow(p as u64, arity) as usize;
        Self::from_values(p, arity, vec![c; size])
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn arity(&self) -> usize {
        self.arity as usize
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// Nonzero coefficients as (exponent vector, coefficient) pairs.
    pub fn monomials(&self) -> BTreeMap<Vec<u8>, u8> {
        let mut out = BTreeMap::new();
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                out.insert(index_digits(idx as u64, self.p, self.arity()), c);
            }
        }
        out
    }

    pub fn eval(&self, point: &[u8]) -> u8 {
        let mut idx = 0u64;
        for &d in point.iter().rev() {
            idx = idx * self.p as u64 + d as u64;
        }
        self.values[idx as usize]
    }

    /// Degree of the reduced polynomial: max exponent-vector sum over the
    /// nonzero coefficients, 0 for the zero function.
    pub fn degree(&self) -> u32 {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c != 0)
            .map(|(idx, _)| {
                index_digits(idx as u64, self.p, self.arity())
                    .iter()
                    .map(|&d| d as u32)
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| ((a as u32 + b as u32) % self.p) as u8)
            .collect();
        Self::from_values(self.p, self.arity(), values)
    }

    pub fn scale(&self, c: u8) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|&a| ((a as u32 * c as u32) % self.p) as u8)
            .collect();
        Self::from_values(self.p, self.arity(), values)
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            return Err(Error::MixedPrime(self.p, other.p));
        }
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: other.arity(),
            });
        }
        Ok(())
    }

    /// Minor via an argument map, as for Boolean functions.
    pub fn minor(&self, target_arity: usize, images: &[usize]) -> Result<Self> {
        if images.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: images.len(),
            });
        }
        for &i in images {
            if i == 0 || i > target_arity {
                return Err(Error::BadMinorMap {
                    image: i,
                    target: target_arity,
                });
            }
        }
        let size = pow(self.p as u64, target_arity);
        if size > TABLE_BOUND {
            return Err(Error::SizeBound {
                size,
                bound: TABLE_BOUND,
            });
        }
        let mut values = vec![0u8; size as usize];
        for (idx, v) in values.iter_mut().enumerate() {
            let digits = index_digits(idx as u64, self.p, target_arity);
            let point: Vec<u8> = images.iter().map(|&i| digits[i - 1]).collect();
            *v = self.eval(&point);
        }
        Self::from_values(self.p, target_arity, values)
    }

    /// A compact canonical key (base-p digits of the value table).
    pub fn key(&self) -> u64 {
        let mut k = 0u64;
        for &v in self.values.iter().rev() {
            k = k * self.p as u64 + v as u64;
        }
        k
    }
}

fn index_digits(mut idx: u64, p: u32, arity: usize) -> Vec<u8> {
    let mut out = vec![0u8; arity];
    for d in out.iter_mut() {
        *d = (idx % p as u64) as u8;
        idx /= p as u64;
    }
    out
}

/// Per-axis inverse Vandermonde: converts a vector of values along one axis
/// into coefficients of powers `0..p`.
fn inverse_vandermonde(p: u32) -> Vec<Vec<u8>> {
    let n = p as usize;
    let pf = p as i64;
    // build V[a][e] = a^e, then invert by Gauss-Jordan over GF(p)
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|e| {
                    let mut acc = 1i64;
                    for _ in 0..e {
                        acc = acc * a as i64 % pf;
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let mut inv: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| (i == j) as i64).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r][col] % pf != 0).expect("invertible");
        m.swap(col, pivot);
        inv.swap(col, pivot);
        // normalize: multiply row by pivot inverse
        let inv_pivot = mod_inverse(m[col][col], pf);
        for j in 0..n {
            m[col][j] = m[col][j] * inv_pivot % pf;
            inv[col][j] = inv[col][j] * inv_pivot % pf;
        }
        for r in 0..n {
            if r != col && m[r][col] != 0 {
                let factor = m[r][col];
                for j in 0..n {
                    m[r][j] = (m[r][j] - factor * m[col][j]).rem_euclid(pf);
                    inv[r][j] = (inv[r][j] - factor * inv[col][j]).rem_euclid(pf);
                }
            }
        }
    }
    inv.into_iter()
        .map(|row| row.into_iter().map(|v| v as u8).collect())
        .collect()
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // p is prime and small: Fermat
    let mut acc = 1i64;
    let a = a.rem_euclid(p);
    for _ in 0..p - 2 {
        acc = acc * a % p;
    }
    acc
}

/// The unique reduced polynomial agreeing with the value table: the
/// coefficient array indexed like the values (exponent vectors in
/// mixed-radix order).
pub fn interpolate(values: &[u8], p: u32, arity: usize) -> Vec<u8> {
    let vinv = inverse_vandermonde(p);
    let pn = values.len();
    let pu = p as usize;
    let mut cur: Vec<u8> = values.to_vec();
    let mut stride = 1usize;
    for _axis in 0..arity {
        let mut next = vec![0u8; pn];
        let block = stride * pu;
        for base in (0..pn).step_by(block) {
            for off in 0..stride {
                // gather the p entries along this axis
                for e in 0..pu {
                    let mut acc = 0u32;
                    for a in 0..pu {
                        acc += vinv[e][a] as u32 * cur[base + off + a * stride] as u32;
                    }
                    next[base + off + e * stride] = (acc % p) as u8;
                }
            }
        }
        cur = next;
        stride *= pu;
    }
    cur
}

/// Evaluate a coefficient array on every point (inverse of `interpolate`).
pub fn evaluate_all(coeffs: &[u8], p: u32, arity: usize) -> Vec<u8> {
    let pn = coeffs.len();
    let pu = p as usize;
    let mut cur: Vec<u8> = coeffs.to_vec();
    let mut stride = 1usize;
    for _axis in 0..arity {
        let mut next = vec![0u8; pn];
        let block = stride * pu;
        for base in (0..pn).step_by(block) {
            for off in 0..stride {
                for a in 0..pu {
                    // Horner over the exponents at point value a
                    let mut acc = 0u32;
                    for e in (0..pu).rev() {
                        acc = (acc * a as u32 + cur[base + off + e * stride] as u32) % p;
                    }
                    next[base + off + a * stride] = acc as u8;
                }
            }
        }
        cur = next;
        stride *= pu;
    }
    cur
}

/// The degree-bounded classification of the linear-stable closure of a
/// finite generator set: `Empty` for no generators, otherwise `D_m` with `m`
/// the maximal degree. (The unbounded-degree case cannot arise from finite
/// input; the name exists for CLI use only.)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GFpClass {
    Empty,
    DegreeAtMost(u32),
    AllOperations,
}

impl GFpClass {
    pub fn canonical_name(&self) -> String {
        match self {
            GFpClass::Empty => "Empty".into(),
            GFpClass::DegreeAtMost(m) => format!("D{m}"),
            GFpClass::AllOperations => "Omega".into(),
        }
    }
}

pub fn gfp_classify(gens: &[GFpFn]) -> Result<GFpClass> {
    let Some(first) = gens.first() else {
        return Ok(GFpClass::Empty);
    };
    let mut max = 0;
    for g in gens {
        if g.prime() != first.prime() {
            return Err(Error::MixedPrime(first.prime(), g.prime()));
        }
        max = max.max(g.degree());
    }
    Ok(GFpClass::DegreeAtMost(max))
}

/// Result of the bounded closure: per-arity sorted sets of functions.
pub struct GFpFamily {
    pub p: u32,
    pub cap: usize,
    pub slices: Vec<Vec<GFpFn>>,
}

impl GFpFamily {
    pub fn slice(&self, arity: usize) -> &[GFpFn] {
        &self.slices[arity - 1]
    }

    pub fn contains(&self, f: &GFpFn) -> bool {
        f.arity() <= self.cap
            && self.slices[f.arity() - 1]
                .binary_search_by_key(&f.key(), |g| g.key())
                .is_ok()
    }
}

/// Bounded closure under stability with the clone of linear functions on
/// both sides: minors, pointwise sums and scalar multiples, constants, and
/// substitution of a sum / scaled argument / constant into the first slot.
///
/// All closure operations are linear in the function argument, so each arity
/// slice of the closure is the GF(p) span of the constants and the
/// substitution images of the generators; the fixed point runs over span
/// bases rather than members.
pub fn gfp_closure_oracle(gens: &[GFpFn], arity_cap: usize) -> Result<GFpFamily> {
    let Some(first) = gens.first() else {
        return Ok(GFpFamily {
            p: 0,
            cap: arity_cap,
            slices: vec![Vec::new(); arity_cap],
        });
    };
    let p = first.prime();
    for g in gens {
        if g.prime() != p {
            return Err(Error::MixedPrime(p, g.prime()));
        }
        if g.arity() > arity_cap {
            return Err(Error::CapExceeded {
                requested: g.arity(),
                cap: arity_cap,
            });
        }
    }
    if pow(p as u64, arity_cap) > TABLE_BOUND {
        return Err(Error::SizeBound {
            size: pow(p as u64, arity_cap),
            bound: TABLE_BOUND,
        });
    }

    // per-arity echelon basis over GF(p), keyed by leading index
    let mut bases: Vec<Vec<Vec<u8>>> = vec![Vec::new(); arity_cap];
    let mut queue: Vec<(usize, Vec<u8>)> = Vec::new();

    let insert = |bases: &mut Vec<Vec<Vec<u8>>>,
                  queue: &mut Vec<(usize, Vec<u8>)>,
                  arity: usize,
                  vec: Vec<u8>| {
        if let Some(reduced) = echelon_reduce(&bases[arity - 1], vec, p) {
            bases[arity - 1].push(reduced.clone());
            // descending leading index keeps reduction triangular
            bases[arity - 1].sort_by_key(|v| std::cmp::Reverse(leading_index(v)));
            queue.push((arity, reduced));
        }
    };

    // seed: generators and all constants at every arity
    for g in gens {
        insert(&mut bases, &mut queue, g.arity(), g.values().to_vec());
    }
    for m in 1..=arity_cap {
        let size = pow(p as u64, m) as usize;
        insert(&mut bases, &mut queue, m, vec![1u8; size]);
    }

    while let Some((n, vec)) = queue.pop() {
        let f = GFpFn::from_values(p, n, vec)?;
        // minors into every arity within the cap
        for m in 1..=arity_cap {
            let mut images = vec![1usize; n];
            loop {
                let g = f.minor(m, &images)?;
                insert(&mut bases, &mut queue, m, g.values().to_vec());
                if !next_images(&mut images, m) {
                    break;
                }
            }
        }
        // right substitutions into the first argument: x1 + x_{n+1}, c*x1, c
        if n < arity_cap {
            let g = subst_first_sum(&f)?;
            insert(&mut bases, &mut queue, n + 1, g.values().to_vec());
        }
        for c in 0..p as u8 {
            let g = subst_first_scale(&f, c)?;
            insert(&mut bases, &mut queue, n, g.values().to_vec());
            let g = subst_first_const(&f, c)?;
            insert(&mut bases, &mut queue, n, g.values().to_vec());
        }
    }

    // enumerate each span
    let mut slices = Vec::with_capacity(arity_cap);
    for m in 1..=arity_cap {
        let basis = &bases[m - 1];
        if basis.is_empty() {
            slices.push(Vec::new());
            continue;
        }
        let dim = basis.len();
        let count = pow(p as u64, dim);
        if count > 1 << 22 {
            return Err(Error::SizeBound {
                size: count,
                bound: 1 << 22,
            });
        }
        let size = pow(p as u64, m) as usize;
        let mut members = Vec::with_capacity(count as usize);
        let mut combo = vec![0u8; dim];
        loop {
            let mut acc = vec![0u32; size];
            for (i, &c) in combo.iter().enumerate() {
                if c != 0 {
                    for (a, &b) in acc.iter_mut().zip(&basis[i]) {
                        *a += c as u32 * b as u32;
                    }
                }
            }
            let values: Vec<u8> = acc.into_iter().map(|v| (v % p) as u8).collect();
            members.push(GFpFn::from_values(p, m, values)?);
            // advance base-p odometer
            let mut pos = 0;
            loop {
                if pos == dim {
                    break;
                }
                combo[pos] += 1;
                if (combo[pos] as u32) < p {
                    break;
                }
                combo[pos] = 0;
                pos += 1;
            }
            if pos == dim {
                break;
            }
        }
        members.sort_by_key(|f| f.key());
        members.dedup();
        slices.push(members);
    }
    Ok(GFpFamily {
        p,
        cap: arity_cap,
        slices,
    })
}

fn next_images(images: &mut [usize], m: usize) -> bool {
    let mut pos = 0;
    loop {
        if pos == images.len() {
            return false;
        }
        images[pos] += 1;
        if images[pos] <= m {
            return true;
        }
        images[pos] = 1;
        pos += 1;
    }
}

/// `f(x1 + x2, x3, ..., x_{n+1})`.
fn subst_first_sum(f: &GFpFn) -> Result<GFpFn> {
    let p = f.prime();
    let n = f.arity();
    let out_arity = n + 1;
    let size = pow(p as u64, out_arity) as usize;
    let mut values = vec![0u8; size];
    for (idx, v) in values.iter_mut().enumerate() {
        let d = index_digits(idx as u64, p, out_arity);
        let mut point = Vec::with_capacity(n);
        point.push(((d[0] as u32 + d[1] as u32) % p) as u8);
        point.extend_from_slice(&d[2..]);
        *v = f.eval(&point);
    }
    GFpFn::from_values(p, out_arity, values)
}

/// `f(c * x1, x2, ..., xn)`.
fn subst_first_scale(f: &GFpFn, c: u8) -> Result<GFpFn> {
    let p = f.prime();
    let n = f.arity();
    let size = pow(p as u64, n) as usize;
    let mut values = vec![0u8; size];
    for (idx, v) in values.iter_mut().enumerate() {
        let mut point = index_digits(idx as u64, p, n);
        point[0] = ((c as u32 * point[0] as u32) % p) as u8;
        *v = f.eval(&point);
    }
    GFpFn::from_values(p, n, values)
}

/// `f(c, x2, ..., xn)`.
fn subst_first_const(f: &GFpFn, c: u8) -> Result<GFpFn> {
    let p = f.prime();
    let n = f.arity();
    let size = pow(p as u64, n) as usize;
    let mut values = vec![0u8; size];
    for (idx, v) in values.iter_mut().enumerate() {
        let mut point = index_digits(idx as u64, p, n);
        point[0] = c;
        *v = f.eval(&point);
    }
    GFpFn::from_values(p, n, values)
}

fn leading_index(v: &[u8]) -> usize {
    v.iter().rposition(|&x| x != 0).unwrap_or(0)
}

/// Reduce against an echelon basis; `Some(reduced)` if independent.
fn echelon_reduce(basis: &[Vec<u8>], mut v: Vec<u8>, p: u32) -> Option<Vec<u8>> {
    for b in basis {
        let lead = leading_index(b);
        if v[lead] != 0 {
            // eliminate: v -= (v[lead] / b[lead]) * b
            let factor =
                (v[lead] as i64 * mod_inverse(b[lead] as i64, p as i64)).rem_euclid(p as i64);
            for (x, &y) in v.iter_mut().zip(b) {
                *x = ((*x as i64 - factor * y as i64).rem_euclid(p as i64)) as u8;
            }
        }
    }
    if v.iter().all(|&x| x == 0) {
        None
    } else {
        Some(v)
    }
}

/// Parse the CLI literal: `gfp:p=3 poly:x1^2 + 2*x2` or `gfp:p=3 vt:0,1,1@1`.
pub fn parse_gfp_fn(input: &str) -> Result<GFpFn> {
    let s = input.trim();
    let perr = |msg: String| Error::Parse { pos: 0, msg };
    let rest = s
        .strip_prefix("gfp:p=")
        .ok_or_else(|| perr("expected 'gfp:p=<prime> ...'".into()))?;
    let sp = rest
        .find(char::is_whitespace)
        .ok_or_else(|| perr("expected a space after the prime".into()))?;
    let p: u32 = rest[..sp].parse().map_err(|_| perr("bad prime".into()))?;
    check_prime(p)?;
    let body = rest[sp..].trim();
    if let Some(vt) = body.strip_prefix("vt:") {
        let (digits, arity) = match vt.rfind('@') {
            Some(at) => {
                let a: usize = vt[at + 1..]
                    .trim()
                    .parse()
                    .map_err(|_| perr("bad arity after '@'".into()))?;
                (&vt[..at], a)
            }
            None => return Err(perr("value-table form needs an explicit '@arity'".into())),
        };
        let values: Vec<u8> = digits
            .split(',')
            .map(|d| {
                d.trim()
                    .parse::<u8>()
                    .map_err(|_| perr(format!("bad value '{d}'")))
            })
            .collect::<Result<_>>()?;
        GFpFn::from_values(p, arity, values)
    } else if let Some(poly) = body.strip_prefix("poly:") {
        parse_gfp_poly(p, poly)
    } else {
        Err(perr("expected 'poly:' or 'vt:' after the prime".into()))
    }
}

fn parse_gfp_poly(p: u32, body: &str) -> Result<GFpFn> {
    let perr = |msg: String| Error::Parse { pos: 0, msg };
    let (body, arity_override) = match body.rfind('@') {
        Some(at) => {
            let a: usize = body[at + 1..]
                .trim()
                .parse()
                .map_err(|_| perr("bad arity after '@'".into()))?;
            (&body[..at], Some(a))
        }
        None => (body, None),
    };
    // terms: coefficient and exponent-vector pairs
    struct Term {
        coeff: u32,
        exps: Vec<(usize, u32)>,
    }
    let mut terms: Vec<Term> = Vec::new();
    let mut max_var = 0usize;
    for t in body.split('+') {
        let t = t.trim();
        if t.is_empty() {
            return Err(perr("empty term".into()));
        }
        let mut coeff = 1u32;
        let mut exps: Vec<(usize, u32)> = Vec::new();
        let mut chars = t.char_indices().peekable();
        let mut saw = false;
        while let Some((i, c)) = chars.next() {
            match c {
                ' ' | '\t' | '*' => {}
                '0'..='9' => {
                    let mut digits = String::from(c);
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            digits.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let v: u32 = digits.parse().map_err(|_| perr("bad coefficient".into()))?;
                    coeff = coeff * (v % p) % p;
                    saw = true;
                }
                'x' | 'X' => {
                    let mut digits = String::new();
                    while let Some(&(_, d)) = chars.peek() {
                        if d.is_ascii_digit() {
                            digits.push(d);
                            chars.next();
                        } else {
                            break;
                        }
                    }
                    let idx: usize = digits
                        .parse()
                        .map_err(|_| perr(format!("expected variable index at byte {i}")))?;
                    let mut exp = 1u32;
                    if let Some(&(_, '^')) = chars.peek() {
                        chars.next();
                        let mut ed = String::new();
                        while let Some(&(_, d)) = chars.peek() {
                            if d.is_ascii_digit() {
                                ed.push(d);
                                chars.next();
                            } else {
                                break;
                            }
                        }
                        exp = ed.parse().map_err(|_| perr("bad exponent".into()))?;
                    }
                    if exp > p - 1 {
                        return Err(perr(format!(
                            "exponent {exp} exceeds p-1 = {} (polynomials are reduced)",
                            p - 1
                        )));
                    }
                    max_var = max_var.max(idx);
                    exps.push((idx, exp));
                    saw = true;
                }
                _ => return Err(perr(format!("unexpected character '{c}'"))),
            }
        }
        if !saw {
            return Err(perr(format!("term '{t}' has no factors")));
        }
        terms.push(Term { coeff, exps });
    }
    let arity = match arity_override {
        Some(a) if a >= max_var.max(1) => a,
        Some(a) => {
            return Err(perr(format!(
                "arity {a} smaller than largest variable x{max_var}"
            )))
        }
        None => max_var.max(1),
    };
    let size = pow(p as u64, arity);
    if size > TABLE_BOUND {
        return Err(Error::SizeBound {
            size,
            bound: TABLE_BOUND,
        });
    }
    let mut coeffs = vec![0u8; size as usize];
    for t in &terms {
        let mut exp_vec = vec![0u32; arity];
        for &(var, e) in &t.exps {
            exp_vec[var - 1] += e;
        }
        if exp_vec.iter().any(|&e| e > p - 1) {
            return Err(perr("combined exponent exceeds p-1".into()));
        }
        let mut idx = 0u64;
        for &e in exp_vec.iter().rev() {
            idx = idx * p as u64 + e as u64;
        }
        coeffs[idx as usize] = ((coeffs[idx as usize] as u32 + t.coeff) % p) as u8;
    }
    GFpFn::from_coeffs(p, arity, coeffs)
}

/// Canonical polynomial string: monomials sorted by (total degree, exponent
/// vector), variables ascending.
pub fn print_gfp_fn(f: &GFpFn) -> String {
    let mut monos: Vec<(u32, Vec<u8>, u8)> = f
        .monomials()
        .into_iter()
        .map(|(exps, c)| (exps.iter().map(|&e| e as u32).sum(), exps, c))
        .collect();
    monos.sort();
    if monos.is_empty() {
        return format!("gfp:p={} poly:0@{}", f.prime(), f.arity());
    }
    let body = monos
        .iter()
        .map(|(_, exps, c)| {
            let mut parts = Vec::new();
            if *c != 1 || exps.iter().all(|&e| e == 0) {
                parts.push(c.to_string());
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("x{}", i + 1)),
                    _ => parts.push(format!("x{}^{e}", i + 1)),
                }
            }
            parts.join("*")
        })
        .collect::<Vec<_>>()
        .join(" + ");
    let max_var = monos
        .iter()
        .flat_map(|(_, exps, _)| {
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1)
        })
        .max()
        .unwrap_or(0);
    if max_var == f.arity() {
        format!("gfp:p={} poly:{body}", f.prime())
    } else {
        format!("gfp:p={} poly:{body}@{}", f.prime(), f.arity())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_matches_anf_over_gf2() {
        // OR2 has reduced polynomial x1 + x2 + x1 x2 over GF(2)
        let or2 = GFpFn::from_values(2, 2, vec![0, 1, 1, 1]).unwrap();
        let m = or2.monomials();
        assert_eq!(m.len(), 3);
        assert_eq!(m[&vec![1, 0]], 1);
        assert_eq!(m[&vec![0, 1]], 1);
        assert_eq!(m[&vec![1, 1]], 1);
    }

    #[test]
    fn interpolation_square_over_gf3() {
        // f(x) = x^2 over GF(3): values 0, 1, 1
        let f = GFpFn::from_values(3, 1, vec![0, 1, 1]).unwrap();
        let m = f.monomials();
        assert_eq!(m.len(), 1);
        assert_eq!(m[&vec![2]], 1);
        assert_eq!(f.degree(), 2);
    }

    #[test]
    fn interpolation_constant() {
        let f = GFpFn::constant(3, 2, 2).unwrap();
        let m = f.monomials();
        assert_eq!(m.len(), 1);
        assert_eq!(m[&vec![0, 0]], 2);
        assert_eq!(f.degree(), 0);
    }

    #[test]
    fn interpolation_round_trip_gf3() {
        // every unary GF(3) operation round-trips values -> coeffs -> values
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    let f = GFpFn::from_values(3, 1, vec![a, b, c]).unwrap();
                    let g = GFpFn::from_coeffs(3, 1, f.coeffs.clone()).unwrap();
                    assert_eq!(f.values, g.values);
                }
            }
        }
    }

    #[test]
    fn degree_examples() {
        let f = parse_gfp_fn("gfp:p=3 poly:x1 + 2*x2").unwrap();
        assert_eq!(f.degree(), 1);
        let mu = GFpFn::from_values(2, 3, vec![0, 0, 0, 1, 0, 1, 1, 1]).unwrap();
        assert_eq!(mu.degree(), 2);
    }

    #[test]
    fn classify_examples() {
        let x2 = parse_gfp_fn("gfp:p=3 poly:x1^2").unwrap();
        assert_eq!(gfp_classify(&[x2]).unwrap(), GFpClass::DegreeAtMost(2));
        let one = GFpFn::constant(3, 1, 1).unwrap();
        assert_eq!(gfp_classify(&[one]).unwrap(), GFpClass::DegreeAtMost(0));
        let f = parse_gfp_fn("gfp:p=3 poly:x1*x2 + x1").unwrap();
        assert_eq!(gfp_classify(&[f]).unwrap(), GFpClass::DegreeAtMost(2));
        assert_eq!(gfp_classify(&[]).unwrap(), GFpClass::Empty);
        let p2 = GFpFn::constant(2, 1, 1).unwrap();
        let p3 = GFpFn::constant(3, 1, 1).unwrap();
        assert!(gfp_classify(&[p2, p3]).is_err());
    }

    #[test]
    fn literal_forms() {
        let f = parse_gfp_fn("gfp:p=3 vt:0,1,1@1").unwrap();
        assert_eq!(f, parse_gfp_fn("gfp:p=3 poly:x1^2").unwrap());
        assert!(parse_gfp_fn("gfp:p=4 poly:x1").is_err());
        assert!(parse_gfp_fn("gfp:p=3 poly:x1^3").is_err());
        // printer output re-parses
        let g = parse_gfp_fn("gfp:p=3 poly:2*x1^2*x2 + x2 + 1").unwrap();
        assert_eq!(parse_gfp_fn(&print_gfp_fn(&g)).unwrap(), g);
    }

    #[test]
    fn closure_of_conjunction_over_gf2_is_degree_two() {
        let and2 = GFpFn::from_values(2, 2, vec![0, 0, 0, 1]).unwrap();
        let fam = gfp_closure_oracle(&[and2], 3).unwrap();
        for m in 1..=3usize {
            let want: Vec<GFpFn> = (0..1u64 << (1 << m))
                .map(|raw| {
                    let values: Vec<u8> = (0..1 << m).map(|b| (raw >> b & 1) as u8).collect();
                    GFpFn::from_values(2, m, values).unwrap()
                })
                .filter(|f| f.degree() <= 2)
                .collect();
            let mut want = want;
            want.sort_by_key(|f| f.key());
            assert_eq!(fam.slice(m), &want[..], "arity {m}");
        }
    }

    #[test]
    fn closure_of_empty_set_is_empty() {
        let fam = gfp_closure_oracle(&[], 3).unwrap();
        for m in 1..=3 {
            assert!(fam.slice(m).is_empty());
        }
    }
}
