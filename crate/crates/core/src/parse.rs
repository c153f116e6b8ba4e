//! Function literals: polynomial form (`x1*x2 + x3 + 1`, juxtaposition
//! `x1x2` also accepted) and truth-table form (`tt:0b01101001`,
//! `tt:0x69@3`).
//!
//! Truth-table literals are bit *sequences*: the leftmost character is bit 0,
//! i.e. `f(0,...,0)`, and hex digits expand to four bits starting from the
//! digit's most significant bit. An optional `@n` suffix fixes the arity
//! (mandatory information when the polynomial does not mention the last
//! argument); the printer emits it whenever needed so that output re-parses
//! to the same function.

use crate::boolfn::BoolFn;
use crate::error::{Error, Result};

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Split a trailing `@n` arity annotation off a literal.
fn split_arity_suffix(s: &str) -> Result<(&str, Option<usize>)> {
    match s.rfind('@') {
        None => Ok((s, None)),
        Some(at) => {
            let digits = s[at + 1..].trim();
            let arity: usize = digits
                .parse()
                .map_err(|_| err(at + 1, "expected arity digits after '@'"))?;
            Ok((&s[..at], Some(arity)))
        }
    }
}

/// Parse a Boolean function literal.
pub fn parse_fn(input: &str) -> Result<BoolFn> {
    let s = input.trim();
    if let Some(rest) = s.strip_prefix("tt:") {
        parse_table(rest)
    } else {
        parse_polynomial(s)
    }
}

fn parse_table(s: &str) -> Result<BoolFn> {
    let (body, arity) = split_arity_suffix(s)?;
    let body = body.trim();
    let mut seq = Vec::new();
    if let Some(bin) = body.strip_prefix("0b") {
        for (i, c) in bin.char_indices() {
            match c {
                '0' => seq.push(false),
                '1' => seq.push(true),
                '_' => {}
                _ => return Err(err(i, format!("invalid binary digit '{c}'"))),
            }
        }
    } else if let Some(hex) = body.strip_prefix("0x") {
        for (i, c) in hex.char_indices() {
            if c == '_' {
                continue;
            }
            let d = c
                .to_digit(16)
                .ok_or_else(|| err(i, format!("invalid hex digit '{c}'")))?;
            for k in (0..4).rev() {
                seq.push(d >> k & 1 != 0);
            }
        }
    } else {
        return Err(err(0, "truth table literal must start with 0b or 0x"));
    }
    let arity = match arity {
        Some(a) => {
            if seq.len() != 1usize << a {
                return Err(err(
                    0,
                    format!(
                        "table has {} bits but arity {a} needs {}",
                        seq.len(),
                        1usize << a
                    ),
                ));
            }
            a
        }
        None => {
            let a = seq.len().trailing_zeros() as usize;
            if seq.is_empty() || seq.len() != 1usize << a {
                return Err(err(
                    0,
                    format!("table length {} is not a power of two", seq.len()),
                ));
            }
            a
        }
    };
    if arity == 0 {
        return Err(Error::ArityOutOfRange(0));
    }
    BoolFn::from_fn(arity, |b| seq[b as usize])
}

fn parse_polynomial(s: &str) -> Result<BoolFn> {
    let (body, arity_override) = split_arity_suffix(s)?;
    let mut monomials: Vec<Option<u32>> = Vec::new(); // None = term multiplied by 0
    let mut max_var = 0usize;
    for term in body.split('+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(err(0, "empty term"));
        }
        let mut mask = 0u32;
        let mut zero = false;
        let mut chars = term.char_indices().peekable();
        let mut saw_factor = false;
        while let Some((i, c)) = chars.next() {
            match c {
                ' ' | '\t' | '*' => {}
                '1' => saw_factor = true,
                '0' => {
                    saw_factor = true;
                    zero = true;
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
                        .map_err(|_| err(i, "expected variable index after 'x'"))?;
                    if idx == 0 || idx > crate::MAX_ARITY {
                        return Err(err(i, format!("variable index {idx} out of range")));
                    }
                    mask |= 1 << (idx - 1);
                    max_var = max_var.max(idx);
                    saw_factor = true;
                }
                _ => return Err(err(i, format!("unexpected character '{c}'"))),
            }
        }
        if !saw_factor {
            return Err(err(0, format!("term '{term}' has no factors")));
        }
        monomials.push(if zero { None } else { Some(mask) });
    }
    let arity = match arity_override {
        Some(a) => {
            if a < max_var.max(1) {
                return Err(err(
                    0,
                    format!("arity {a} smaller than largest variable x{max_var}"),
                ));
            }
            a
        }
        None => max_var.max(1),
    };
    BoolFn::from_monomial_masks(arity, monomials.into_iter().flatten())
}

fn mask_vars(mask: u32) -> Vec<usize> {
    (0..32)
        .filter(|i| mask >> i & 1 != 0)
        .map(|i| i + 1)
        .collect()
}

/// Canonical polynomial: monomials sorted by (size, lexicographic variable
/// tuple), variables ascending, with an `@n` suffix whenever the last
/// argument is not mentioned.
pub fn print_fn(f: &BoolFn) -> String {
    let mut monos: Vec<Vec<usize>> = f.monomial_masks().map(mask_vars).collect();
    monos.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let max_var = monos
        .iter()
        .flat_map(|m| m.iter().copied())
        .max()
        .unwrap_or(0);
    let body = if monos.is_empty() {
        "0".to_string()
    } else {
        monos
            .iter()
            .map(|m| {
                if m.is_empty() {
                    "1".to_string()
                } else {
                    m.iter()
                        .map(|v| format!("x{v}"))
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    };
    if f.arity() > max_var.max(1) {
        format!("{body}@{}", f.arity())
    } else {
        body
    }
}

/// Truth table as a `tt:0b...` bit-sequence literal (bit 0 first).
pub fn print_table(f: &BoolFn) -> String {
    let mut s = String::with_capacity(f.table_len() as usize + 5);
    s.push_str("tt:0b");
    for b in 0..f.table_len() {
        s.push(if f.eval(b) { '1' } else { '0' });
    }
    s
}

impl std::fmt::Display for BoolFn {
    fn fmt(&self, fmt: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fmt.write_str(&print_fn(self))
    }
}

impl std::str::FromStr for BoolFn {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_fn(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_forms() {
        assert_eq!(
            parse_fn("x1*x2 + x3 + 1").unwrap(),
            parse_fn("x1x2+x3+1").unwrap()
        );
        assert_eq!(parse_fn("x1").unwrap().arity(), 1);
        assert_eq!(parse_fn("x1@3").unwrap().arity(), 3);
        assert_eq!(parse_fn("1").unwrap(), BoolFn::constant(1, true).unwrap());
        assert_eq!(
            parse_fn("0@2").unwrap(),
            BoolFn::constant(2, false).unwrap()
        );
        // x12 is a single variable, not a product
        assert_eq!(parse_fn("x12").unwrap().arity(), 12);
        // a zero factor kills its term
        assert_eq!(parse_fn("x1*0 + x2").unwrap(), parse_fn("x2").unwrap());
        // repeated monomials cancel
        assert_eq!(parse_fn("x1 + x1").unwrap(), parse_fn("0").unwrap());
    }

    #[test]
    fn table_forms() {
        // XOR3: bit sequence 01101001, leftmost bit = f(0,0,0)
        let xor3 = parse_fn("x1 + x2 + x3").unwrap();
        assert_eq!(parse_fn("tt:0b01101001").unwrap(), xor3);
        assert_eq!(parse_fn("tt:0x69@3").unwrap(), xor3);
        assert_eq!(parse_fn("tt:0x69").unwrap(), xor3);
        assert!(parse_fn("tt:0b011").is_err());
        assert!(parse_fn("tt:0x69@2").is_err());
        assert!(parse_fn("tt:69").is_err());
    }

    #[test]
    fn printer_is_canonical() {
        let or2 = parse_fn("x2 + x1x2 + x1").unwrap();
        assert_eq!(print_fn(&or2), "x1 + x2 + x1*x2");
        let f = parse_fn("x1*x4 + x2*x3 + 1").unwrap();
        assert_eq!(print_fn(&f), "1 + x1*x4 + x2*x3");
        assert_eq!(print_fn(&parse_fn("0@2").unwrap()), "0@2");
        assert_eq!(print_fn(&parse_fn("x1+1@2").unwrap()), "1 + x1@2");
        assert_eq!(print_fn(&parse_fn("1").unwrap()), "1");
    }

    #[test]
    fn errors_carry_positions() {
        match parse_fn("x1 ? x2") {
            Err(Error::Parse { msg, .. }) => assert!(msg.contains('?')),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    mod round_trips {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn polynomial_printer_reparses(arity in 1usize..=6, raw in any::<u64>()) {
                let f = BoolFn::from_raw_table(arity, raw).unwrap();
                prop_assert_eq!(parse_fn(&print_fn(&f)).unwrap(), f);
            }

            #[test]
            fn table_printer_reparses(arity in 1usize..=6, raw in any::<u64>()) {
                let f = BoolFn::from_raw_table(arity, raw).unwrap();
                prop_assert_eq!(parse_fn(&print_table(&f)).unwrap(), f);
            }

            #[test]
            fn monomials_round_trip(arity in 1usize..=6, raw in any::<u64>()) {
                let f = BoolFn::from_raw_table(arity, raw).unwrap();
                prop_assert_eq!(f.monomials().to_fn(), f);
            }
        }
    }
}
