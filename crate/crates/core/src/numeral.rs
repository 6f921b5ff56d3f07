//! Positional numeral codecs: binary fractional expansions, balanced-ternary
//! integer and fractional expansions, dual representations with eventually
//! constant tails, and the bracket grammar `[digits(.digits)?]_base`.
//!
//! Fractional digit sequences reuse [`DigitVec2`] / [`DigitVec3`]: the digit
//! at index j carries weight base^(-j). The binary fractional domain is
//! [0, 1); the balanced-ternary fractional domain is [-1/2, 1/2], matching
//! the snowflake's bounding square.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::digitvec::{DigitVec2, DigitVec3};
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Base selector for the codecs. `Balanced3` means base 3 over digits
/// {-1, 0, 1}.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Base {
    Two,
    Balanced3,
}

impl Base {
    pub fn radix(self) -> u32 {
        match self {
            Base::Two => 2,
            Base::Balanced3 => 3,
        }
    }
}

/// A parsed positional numeral: integer digits (most significant first) and
/// fractional digits (index 1 = first place after the point), both over the
/// base's digit alphabet with -1 written `T`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NumeralString {
    pub base: Base,
    /// Most-significant-first integer digits; canonical form has no leading
    /// zeros (a lone zero stands for an empty integer part).
    pub int_digits: Vec<i8>,
    /// Fractional digits, index 1 first; canonical form has no trailing
    /// zeros.
    pub frac_digits: Vec<i8>,
}

impl NumeralString {
    /// Exact value: sum of integer digits at weights base^i plus fractional
    /// digits at weights base^(-j).
    pub fn value(&self) -> Rational {
        let radix = BigInt::from(self.base.radix());
        let mut int_part = BigInt::zero();
        for d in &self.int_digits {
            int_part = &int_part * &radix + BigInt::from(*d);
        }
        let mut acc = Rational::from_integer(int_part);
        let mut weight = Rational::one();
        let radix_rat = Rational::from_integer(self.base.radix() as i64);
        for d in &self.frac_digits {
            weight = weight / radix_rat.clone();
            acc += &(Rational::from_integer(*d as i64) * weight.clone());
        }
        acc
    }
}

/// Balanced-ternary digits of an integer, least significant first, no
/// trailing zero. Zero encodes as the empty sequence. Negative inputs use
/// the same remainder rule applied to the nonnegative residue.
pub fn int_to_balanced_ternary(n: &BigInt) -> Vec<i8> {
    let three = BigInt::from(3);
    let mut digits = Vec::new();
    let mut rest = n.clone();
    while !rest.is_zero() {
        // nonnegative remainder of division by 3; the remainder 2 becomes
        // digit -1 and bumps the quotient
        let r = ((&rest % &three) + &three) % &three;
        let digit: i8 = if r == BigInt::from(2) {
            -1
        } else if r.is_one() {
            1
        } else {
            0
        };
        digits.push(digit);
        rest = (rest - BigInt::from(digit)) / &three;
    }
    digits
}

/// Value of least-significant-first balanced-ternary digits. Inverse of
/// [`int_to_balanced_ternary`]. Errors on digits outside {-1, 0, 1}.
pub fn balanced_ternary_to_int(digits: &[i8]) -> Result<BigInt> {
    if let Some(bad) = digits.iter().position(|d| !(-1..=1).contains(d)) {
        return Err(Error::Parse {
            position: bad,
            message: format!("invalid balanced-ternary digit {}", digits[bad]),
        });
    }
    let mut acc = BigInt::zero();
    for d in digits.iter().rev() {
        acc = acc * 3 + BigInt::from(*d);
    }
    Ok(acc)
}

/// Exact value of a fractional Z2 digit vector: sum of digits at weights
/// 2^(-j).
pub fn frac_value2(v: &DigitVec2) -> Rational {
    let mut acc = Rational::zero();
    let mut denom = BigUint::one();
    for j in 1..=v.len() {
        denom *= BigUint::from(2u32);
        if v.digit(j) == 1 {
            acc += &Rational::new(BigInt::one(), BigInt::from(denom.clone()));
        }
    }
    acc
}

/// Exact value of a fractional balanced-ternary digit vector.
pub fn frac_value3(v: &DigitVec3) -> Rational {
    let mut acc = Rational::zero();
    let mut denom = BigUint::one();
    for j in 1..=v.len() {
        denom *= BigUint::from(3u32);
        let d = v.digit(j);
        if d != 0 {
            acc += &Rational::new(BigInt::from(d), BigInt::from(denom.clone()));
        }
    }
    acc
}

/// The unique finite binary expansion of x in [0, 1). Errors when x is not
/// dyadic or needs more than `max_len` digits.
pub fn value_to_digits2(x: &Rational, max_len: usize) -> Result<DigitVec2> {
    if x.is_negative() || x.cmp_exact(&Rational::one()) != std::cmp::Ordering::Less {
        return Err(Error::Domain(format!(
            "binary fractional domain is [0,1), got {x}"
        )));
    }
    let mut digits = Vec::new();
    let mut rest = x.clone();
    let half = Rational::new(1, 2);
    while !rest.is_zero() {
        if digits.len() == max_len {
            return Err(Error::NotFinitelyRepresentable(format!(
                "{x} has no finite binary expansion within {max_len} digits"
            )));
        }
        if rest.cmp_exact(&half) != std::cmp::Ordering::Less {
            digits.push(1u8);
            rest = (rest - half.clone()) * Rational::from_integer(2);
        } else {
            digits.push(0u8);
            rest = rest * Rational::from_integer(2);
        }
    }
    DigitVec2::new(digits)
}

/// The unique finite balanced-ternary expansion of x in [-1/2, 1/2]. Errors
/// when x is not triadic or needs more than `max_len` digits. (The
/// endpoints +-1/2 themselves are not triadic: their expansions are the
/// infinite constant tails.)
pub fn value_to_digits3(x: &Rational, max_len: usize) -> Result<DigitVec3> {
    let half = Rational::new(1, 2);
    if x.abs().cmp_exact(&half) == std::cmp::Ordering::Greater {
        return Err(Error::Domain(format!(
            "balanced-ternary fractional domain is [-1/2,1/2], got {x}"
        )));
    }
    let sixth = Rational::new(1, 6);
    let third = Rational::new(1, 3);
    let mut digits = Vec::new();
    let mut rest = x.clone();
    while !rest.is_zero() {
        if digits.len() == max_len {
            return Err(Error::NotFinitelyRepresentable(format!(
                "{x} has no finite balanced-ternary expansion within {max_len} digits"
            )));
        }
        // digit regions: (1/6, 1/2] -> 1, [-1/6, 1/6] -> 0, [-1/2, -1/6) -> -1
        let d: i8 = if rest.cmp_exact(&sixth) == std::cmp::Ordering::Greater {
            1
        } else if rest.cmp_exact(&-&sixth) == std::cmp::Ordering::Less {
            -1
        } else {
            0
        };
        digits.push(d);
        // the nearest-digit choice keeps the remainder inside [-1/2, 1/2]
        rest = (rest - Rational::from_integer(d as i64) * third.clone())
            * Rational::from_integer(3);
    }
    DigitVec3::new(digits)
}

/// One expansion of a value: a finite digit prefix, optionally followed by
/// an infinite constant tail starting right after the prefix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Expansion {
    pub base: Base,
    /// Digits at indices 1..=prefix.len().
    pub prefix: Vec<i8>,
    /// Constant digit repeated at every index past the prefix; `None` means
    /// the expansion is finite.
    pub tail: Option<i8>,
}

impl Expansion {
    /// Digit at 1-based index j, including tail digits.
    pub fn digit(&self, j: usize) -> i8 {
        if j >= 1 && j <= self.prefix.len() {
            self.prefix[j - 1]
        } else {
            self.tail.unwrap_or(0)
        }
    }

    /// Exact value, summing the tail as a geometric series: a constant tail
    /// of digit t after position k contributes t * base^(-k) / (base - 1).
    pub fn value(&self) -> Rational {
        let radix = self.base.radix() as i64;
        let mut acc = Rational::zero();
        let mut weight = Rational::one();
        for d in &self.prefix {
            weight = weight / Rational::from_integer(radix);
            if *d != 0 {
                acc += &(Rational::from_integer(*d as i64) * weight.clone());
            }
        }
        if let Some(t) = self.tail {
            let tail_sum =
                Rational::from_integer(t as i64) * weight / Rational::from_integer(radix - 1);
            acc += &tail_sum;
        }
        acc
    }

    /// True when the expansion has no infinite tail.
    pub fn is_finite(&self) -> bool {
        self.tail.is_none()
    }

    /// Digits truncated to `len` places, for display alongside the tail
    /// marker.
    pub fn truncated(&self, len: usize) -> Vec<i8> {
        (1..=len).map(|j| self.digit(j)).collect()
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let glyph = |d: i8| match d {
            -1 => 'T',
            0 => '0',
            _ => '1',
        };
        if self.prefix.is_empty() && self.tail.is_none() {
            write!(f, "0")?;
        }
        for d in &self.prefix {
            write!(f, "{}", glyph(*d))?;
        }
        if let Some(t) = self.tail {
            write!(f, "({}...)", glyph(t))?;
        }
        Ok(())
    }
}

/// Splits `n` into (cofactor, exponent) with n = cofactor * f^exponent and
/// f not dividing the cofactor.
fn strip_factor(n: &BigUint, f: u32) -> (BigUint, usize) {
    let f = BigUint::from(f);
    let mut rest = n.clone();
    let mut exp = 0usize;
    while (&rest % &f).is_zero() {
        rest /= &f;
        exp += 1;
    }
    (rest, exp)
}

/// All fractional expansions of `x` in the given base whose digits are
/// eventually constant, the finite one (when it exists) first. Values with
/// no such expansion (or outside the base's fractional domain) yield an
/// empty list.
///
/// In base 2 a nonzero dyadic has exactly two: the finite form and the form
/// ending in repeating 1s (a tail of 1s after position k adds 2^(-k)). In
/// balanced base 3 a triadic value has only its finite form, while
/// half-triadic values (denominator 2*3^m) have only constant-tail forms (a
/// tail of constant t after position k adds t * 3^(-k) / 2), as for 1/6 and
/// -1/6 in the hexagon construction.
pub fn dual_representations(x: &Rational, base: Base) -> Vec<Expansion> {
    let mut out = Vec::new();
    if x.is_zero() {
        out.push(Expansion {
            base,
            prefix: Vec::new(),
            tail: None,
        });
        return out;
    }
    let denom = x.denom().to_biguint().expect("denominators are positive");
    match base {
        Base::Two => {
            let (cofactor, m) = strip_factor(&denom, 2);
            if !cofactor.is_one() {
                return out; // expansion is eventually periodic, never constant
            }
            let Ok(finite) = value_to_digits2(x, m) else {
                return out;
            };
            out.push(Expansion {
                base,
                prefix: finite.digits().iter().map(|d| *d as i8).collect(),
                tail: None,
            });
            // x = val(prefix) + 2^(-m): decrement the last nonzero digit and
            // follow with the tail of 1s
            let prefix_val = x - &Rational::new(BigInt::one(), BigInt::from(2).pow(m as u32));
            if let Ok(p) = value_to_digits2(&prefix_val, m) {
                let mut prefix: Vec<i8> = p.digits().iter().map(|d| *d as i8).collect();
                prefix.resize(m, 0);
                out.push(Expansion {
                    base,
                    prefix,
                    tail: Some(1),
                });
            }
        }
        Base::Balanced3 => {
            let (cofactor, m) = strip_factor(&denom, 3);
            if cofactor.is_one() {
                if let Ok(finite) = value_to_digits3(x, m) {
                    out.push(Expansion {
                        base,
                        prefix: finite.digits().to_vec(),
                        tail: None,
                    });
                }
            } else if cofactor == BigUint::from(2u32) {
                for tail in [1i8, -1i8] {
                    // x = val(prefix) + t * 3^(-m) / 2; the prefix value is
                    // triadic exactly because the numerator of x is odd
                    let half_pow =
                        Rational::new(BigInt::from(tail), BigInt::from(3).pow(m as u32))
                            / Rational::from_integer(2);
                    let prefix_val = x - &half_pow;
                    if let Ok(p) = value_to_digits3(&prefix_val, m) {
                        let mut prefix = p.digits().to_vec();
                        prefix.resize(m, 0);
                        out.push(Expansion {
                            base,
                            prefix,
                            tail: Some(tail),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Convenience form of [`dual_representations`] starting from a finite
/// binary expansion.
pub fn dual_representations2(v: &DigitVec2) -> Vec<Expansion> {
    dual_representations(&frac_value2(v), Base::Two)
}

/// Convenience form of [`dual_representations`] starting from a finite
/// balanced-ternary expansion.
pub fn dual_representations3(v: &DigitVec3) -> Vec<Expansion> {
    dual_representations(&frac_value3(v), Base::Balanced3)
}

/// Parses the bracket grammar `'[' digits ('.' digits)? ']' '_' base` with
/// base 2 or 3 and `T` denoting -1 (base 3 only).
pub fn parse_numeral(s: &str) -> Result<NumeralString> {
    let bytes = s.as_bytes();
    let fail = |position: usize, message: String| Error::Parse { position, message };
    if bytes.first() != Some(&b'[') {
        return Err(fail(0, "expected '['".into()));
    }
    let close = s
        .find(']')
        .ok_or_else(|| fail(s.len(), "missing closing ']'".into()))?;
    let body = &s[1..close];
    let after = &s[close + 1..];
    if after.len() != 2 || !after.starts_with('_') {
        return Err(fail(
            close + 1,
            "expected '_' and a base digit after ']'".into(),
        ));
    }
    let base = match after.as_bytes()[1] {
        b'2' => Base::Two,
        b'3' => Base::Balanced3,
        _ => return Err(fail(close + 2, "base must be 2 or 3".into())),
    };
    let read_digits = |txt: &str, offset: usize| -> Result<Vec<i8>> {
        if txt.is_empty() {
            return Err(fail(offset, "expected at least one digit".into()));
        }
        let mut digits = Vec::with_capacity(txt.len());
        for (i, c) in txt.char_indices() {
            let d = match (c, base) {
                ('0', _) => 0,
                ('1', _) => 1,
                ('T', Base::Balanced3) => -1,
                _ => {
                    return Err(fail(
                        offset + i,
                        format!("invalid digit {c:?} for base {}", base.radix()),
                    ))
                }
            };
            digits.push(d);
        }
        Ok(digits)
    };
    let (int_txt, frac_txt) = match body.find('.') {
        None => (body, None),
        Some(dot) => (&body[..dot], Some((&body[dot + 1..], dot + 2))),
    };
    let int_digits = read_digits(int_txt, 1)?;
    let frac_digits = match frac_txt {
        None => Vec::new(),
        Some((txt, offset)) => read_digits(txt, offset)?,
    };
    Ok(canonicalize(NumeralString {
        base,
        int_digits,
        frac_digits,
    }))
}

fn canonicalize(mut n: NumeralString) -> NumeralString {
    while n.int_digits.len() > 1 && n.int_digits[0] == 0 {
        n.int_digits.remove(0);
    }
    while n.frac_digits.last() == Some(&0) {
        n.frac_digits.pop();
    }
    if n.int_digits.is_empty() {
        n.int_digits.push(0);
    }
    n
}

/// Formats a numeral back into the bracket grammar. Round trip:
/// `parse_numeral(format_numeral(n))` yields `n` in canonical form.
pub fn format_numeral(n: &NumeralString) -> String {
    let canonical = canonicalize(n.clone());
    let glyph = |d: &i8| match d {
        -1 => 'T',
        0 => '0',
        _ => '1',
    };
    let mut out = String::from("[");
    out.extend(canonical.int_digits.iter().map(glyph));
    if !canonical.frac_digits.is_empty() {
        out.push('.');
        out.extend(canonical.frac_digits.iter().map(glyph));
    }
    out.push_str("]_");
    out.push_str(&canonical.base.radix().to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn v2(digits: &[u8]) -> DigitVec2 {
        DigitVec2::new(digits.iter().copied()).unwrap()
    }

    fn v3(digits: &[i8]) -> DigitVec3 {
        DigitVec3::new(digits.iter().copied()).unwrap()
    }

    #[test]
    fn eight_in_balanced_ternary() {
        // 8 = [10T]_3: least-significant-first digits (-1, 0, 1)
        assert_eq!(int_to_balanced_ternary(&BigInt::from(8)), vec![-1, 0, 1]);
        assert!(int_to_balanced_ternary(&BigInt::zero()).is_empty());
        // 2 = 3 - 1
        assert_eq!(int_to_balanced_ternary(&BigInt::from(2)), vec![-1, 1]);
    }

    #[test]
    fn balanced_ternary_reads_back() {
        assert_eq!(
            balanced_ternary_to_int(&[-1, 0, 1]).unwrap(),
            BigInt::from(8)
        );
        assert_eq!(balanced_ternary_to_int(&[]).unwrap(), BigInt::zero());
        assert_eq!(balanced_ternary_to_int(&[1, 1]).unwrap(), BigInt::from(4));
        assert!(balanced_ternary_to_int(&[2]).is_err());
    }

    #[test]
    fn round_trip_through_three_to_the_ten() {
        let bound = 3i64.pow(10);
        for n in (-bound..=bound).step_by(37) {
            let n = BigInt::from(n);
            let digits = int_to_balanced_ternary(&n);
            assert_eq!(balanced_ternary_to_int(&digits).unwrap(), n);
            assert_ne!(digits.last(), Some(&0));
        }
    }

    #[test]
    fn fractional_values() {
        assert_eq!(frac_value2(&v2(&[1])), r(1, 2));
        assert_eq!(frac_value2(&v2(&[0, 1, 1])), r(3, 8));
        assert_eq!(frac_value3(&v3(&[1, -1])), r(2, 9));
        assert_eq!(frac_value2(&DigitVec2::empty()), Rational::zero());
    }

    #[test]
    fn value_to_digits_round_trip() {
        assert_eq!(value_to_digits2(&r(1, 2), 8).unwrap(), v2(&[1]));
        assert_eq!(
            value_to_digits2(&Rational::zero(), 8).unwrap(),
            DigitVec2::empty()
        );
        assert_eq!(value_to_digits3(&r(2, 9), 8).unwrap(), v3(&[1, -1]));
        // 1/6 has no finite balanced-ternary expansion at any length
        assert!(matches!(
            value_to_digits3(&r(1, 6), 64),
            Err(Error::NotFinitelyRepresentable(_))
        ));
        assert!(matches!(
            value_to_digits2(&r(1, 3), 64),
            Err(Error::NotFinitelyRepresentable(_))
        ));
        // domain checks
        assert!(matches!(
            value_to_digits2(&r(3, 2), 8),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            value_to_digits3(&r(2, 3), 8),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn uniqueness_of_finite_expansions_to_length_8() {
        use std::collections::HashMap;
        let mut seen: HashMap<String, DigitVec2> = HashMap::new();
        for mask in 0u64..(1 << 8) {
            let v = DigitVec2::from_mask(mask);
            let key = frac_value2(&v).to_string();
            if let Some(prev) = seen.insert(key, v.clone()) {
                panic!("two finite expansions for one value: {prev} and {v}");
            }
        }
        let mut seen3: HashMap<String, DigitVec3> = HashMap::new();
        for v in crate::digitvec::enumerate3(8) {
            let key = frac_value3(&v).to_string();
            if let Some(prev) = seen3.insert(key, v.clone()) {
                panic!("two finite expansions for one value: {prev} and {v}");
            }
        }
    }

    #[test]
    fn duals_of_one_half_in_base_2() {
        let reps = dual_representations(&r(1, 2), Base::Two);
        assert_eq!(reps.len(), 2);
        assert_eq!(reps[0].prefix, vec![1]);
        assert!(reps[0].is_finite());
        assert_eq!(reps[1].prefix, vec![0]);
        assert_eq!(reps[1].tail, Some(1));
        for rep in &reps {
            assert_eq!(rep.value(), r(1, 2));
        }
    }

    #[test]
    fn duals_of_one_sixth_in_balanced_ternary() {
        let reps = dual_representations(&r(1, 6), Base::Balanced3);
        // no finite form; exactly the two constant tails
        assert_eq!(reps.len(), 2);
        assert!(reps.iter().all(|e| !e.is_finite()));
        let ones: Vec<_> = reps.iter().filter(|e| e.tail == Some(1)).collect();
        let negs: Vec<_> = reps.iter().filter(|e| e.tail == Some(-1)).collect();
        assert_eq!(ones.len(), 1);
        assert_eq!(negs.len(), 1);
        // [0.0111...] and [0.1TTT...]
        assert_eq!(ones[0].prefix, vec![0]);
        assert_eq!(negs[0].prefix, vec![1]);
        for rep in &reps {
            assert_eq!(rep.value(), r(1, 6));
        }
        // mirrored for -1/6: [0.T111...] and [0.0TTT...]
        let reps = dual_representations(&r(-1, 6), Base::Balanced3);
        assert_eq!(reps.len(), 2);
        assert!(reps
            .iter()
            .any(|e| e.prefix == vec![-1] && e.tail == Some(1)));
        assert!(reps
            .iter()
            .any(|e| e.prefix == vec![0] && e.tail == Some(-1)));
    }

    #[test]
    fn zero_has_only_the_empty_expansion() {
        let reps = dual_representations(&Rational::zero(), Base::Two);
        assert_eq!(reps.len(), 1);
        assert!(reps[0].is_finite());
        assert!(reps[0].prefix.is_empty());
        let reps = dual_representations(&Rational::zero(), Base::Balanced3);
        assert_eq!(reps.len(), 1);
    }

    #[test]
    fn triadic_values_have_no_balanced_duals() {
        for v in crate::digitvec::enumerate3(4) {
            let reps = dual_representations3(&v);
            assert_eq!(reps.len(), 1, "value {}", frac_value3(&v));
            assert_eq!(reps[0].prefix, v.digits().to_vec());
        }
    }

    #[test]
    fn every_dual_evaluates_to_the_same_value() {
        for mask in 0u64..(1 << 6) {
            let v = DigitVec2::from_mask(mask);
            let value = frac_value2(&v);
            let reps = dual_representations2(&v);
            assert!(!reps.is_empty());
            for rep in reps {
                assert_eq!(rep.value(), value);
            }
        }
        // half-triadic sample points
        for (n, d) in [(1i64, 2i64), (1, 6), (-1, 6), (1, 18), (5, 18), (-7, 18)] {
            for rep in dual_representations(&r(n, d), Base::Balanced3) {
                assert_eq!(rep.value(), r(n, d));
            }
        }
    }

    #[test]
    fn half_has_single_tail_form() {
        // 1/2 = [0.111...]_3 only: the all-minus-ones candidate would need
        // prefix value 1, outside the fractional domain
        let reps = dual_representations(&r(1, 2), Base::Balanced3);
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].prefix, Vec::<i8>::new());
        assert_eq!(reps[0].tail, Some(1));
        assert_eq!(reps[0].value(), r(1, 2));
    }

    #[test]
    fn parse_and_format_numerals() {
        let n = parse_numeral("[10T]_3").unwrap();
        assert_eq!(n.value(), Rational::from_integer(8));
        assert_eq!(format_numeral(&n), "[10T]_3");

        let n = parse_numeral("[0.101]_2").unwrap();
        assert_eq!(n.value(), r(5, 8));
        assert_eq!(format_numeral(&n), "[0.101]_2");

        let n = parse_numeral("[0.1T]_3").unwrap();
        assert_eq!(n.value(), r(2, 9));

        assert!(parse_numeral("[0._2").is_err());
        assert!(parse_numeral("0.1]_2").is_err());
        assert!(parse_numeral("[0.1]_7").is_err());
        assert!(parse_numeral("[0.T]_2").is_err());
        assert!(parse_numeral("[]_2").is_err());
        assert!(parse_numeral("[1.1]_2x").is_err());

        // position reporting
        match parse_numeral("[01x]_2") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn numeral_round_trip_is_canonical() {
        for s in ["[0010.1100]_2", "[T.T01T00]_3", "[0]_3", "[11.01]_2"] {
            let n = parse_numeral(s).unwrap();
            let text = format_numeral(&n);
            assert_eq!(parse_numeral(&text).unwrap(), n);
        }
        let n = parse_numeral("[0010.1100]_2").unwrap();
        assert_eq!(format_numeral(&n), "[10.11]_2");
    }

    proptest! {
        #[test]
        fn int_codec_round_trip(n in -200_000i64..200_000) {
            let n = BigInt::from(n);
            prop_assert_eq!(balanced_ternary_to_int(&int_to_balanced_ternary(&n)).unwrap(), n);
        }

        #[test]
        fn shift_law_base2(mask in 0u64..(1 << 10), k in 0usize..6) {
            // prepending k zeros divides the value by 2^k
            let v = DigitVec2::from_mask(mask);
            let mut shifted = vec![0u8; k];
            shifted.extend_from_slice(v.digits());
            let shifted = DigitVec2::new(shifted).unwrap();
            let scale = Rational::new(1i64, 1i64 << k);
            prop_assert_eq!(frac_value2(&shifted), frac_value2(&v) * scale);
        }

        #[test]
        fn shift_law_base3(idx in 0u64..729, k in 0usize..5) {
            let v = &crate::digitvec::enumerate3(6)[idx as usize];
            let mut shifted = vec![0i8; k];
            shifted.extend_from_slice(v.digits());
            let shifted = DigitVec3::new(shifted).unwrap();
            let scale = Rational::new(1i64, 3i64.pow(k as u32));
            prop_assert_eq!(frac_value3(&shifted), frac_value3(v) * scale);
        }
    }
}
