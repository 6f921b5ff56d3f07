//! Finite-support digit sequences over Z2 = {0,1} and balanced Z3 = {-1,0,1}.
//!
//! Index j starts at 1; under the Egyptian-fraction reading index j carries
//! the unit fraction 1/(j+1), and under the numeral reading it carries the
//! weight base^(-j). Vector addition is componentwise mod 2 (respectively
//! balanced mod 3) with no inter-index carry, which is what makes the
//! identity 2z = 0 (resp. 2z = -z) hold.
//!
//! Both types trim trailing zeros so structural equality is mathematical
//! equality. The textual form writes index 1 leftmost: `"101"` over Z2,
//! `"10T"` over Z3 with `T` denoting -1. The empty vector reads and prints
//! as `"0"`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite-support vector over Z2. Entry `digits[i]` is the digit at index
/// `i + 1`; the last stored entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DigitVec2 {
    digits: Vec<u8>,
}

/// A finite-support vector over balanced Z3, same conventions as
/// [`DigitVec2`] with digits in {-1, 0, 1}.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct DigitVec3 {
    digits: Vec<i8>,
}

/// The vector z(x, y): entry j is 1 where both inputs carry 1, -1 where both
/// carry -1, and 0 elsewhere. Over Z2 it never contains -1.
pub type AgreementVector = DigitVec3;

fn trim_u8(mut v: Vec<u8>) -> Vec<u8> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn trim_i8(mut v: Vec<i8>) -> Vec<i8> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl DigitVec2 {
    pub fn empty() -> Self {
        DigitVec2 { digits: Vec::new() }
    }

    /// Builds from digits listed index-1-first. Errors on digits outside {0,1}.
    pub fn new(digits: impl IntoIterator<Item = u8>) -> Result<Self> {
        let digits: Vec<u8> = digits.into_iter().collect();
        if let Some(bad) = digits.iter().position(|d| *d > 1) {
            return Err(Error::Domain(format!(
                "digit at index {} is not in {{0,1}}",
                bad + 1
            )));
        }
        Ok(DigitVec2 {
            digits: trim_u8(digits),
        })
    }

    /// Bit i of `mask` becomes the digit at index i + 1.
    pub fn from_mask(mask: u64) -> Self {
        let mut digits = Vec::new();
        for i in 0..64 {
            digits.push(((mask >> i) & 1) as u8);
        }
        DigitVec2 {
            digits: trim_u8(digits),
        }
    }

    /// Inverse of [`DigitVec2::from_mask`]. Panics past 64 indices.
    pub fn to_mask(&self) -> u64 {
        assert!(self.digits.len() <= 64, "digit vector too long for a mask");
        self.digits
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, d)| m | ((*d as u64) << i))
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Digit at 1-based index j (0 past the stored support).
    pub fn digit(&self, j: usize) -> u8 {
        if j == 0 || j > self.digits.len() {
            0
        } else {
            self.digits[j - 1]
        }
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Indices j with a nonzero digit, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != 0)
            .map(|(i, _)| i + 1)
    }
}

impl DigitVec3 {
    pub fn empty() -> Self {
        DigitVec3 { digits: Vec::new() }
    }

    /// Builds from digits listed index-1-first. Errors on digits outside {-1,0,1}.
    pub fn new(digits: impl IntoIterator<Item = i8>) -> Result<Self> {
        let digits: Vec<i8> = digits.into_iter().collect();
        if let Some(bad) = digits.iter().position(|d| !(-1..=1).contains(d)) {
            return Err(Error::Domain(format!(
                "digit at index {} is not in {{-1,0,1}}",
                bad + 1
            )));
        }
        Ok(DigitVec3 {
            digits: trim_i8(digits),
        })
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn digit(&self, j: usize) -> i8 {
        if j == 0 || j > self.digits.len() {
            0
        } else {
            self.digits[j - 1]
        }
    }

    pub fn digits(&self) -> &[i8] {
        &self.digits
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, d)| **d != 0)
            .map(|(i, _)| i + 1)
    }
}

impl From<&DigitVec2> for DigitVec3 {
    /// Z2 embeds in Z3: 0 and 1 keep their values.
    fn from(v: &DigitVec2) -> Self {
        DigitVec3 {
            digits: v.digits.iter().map(|d| *d as i8).collect(),
        }
    }
}

/// Componentwise addition mod 2 (no carry between indices).
pub fn vec_add2(x: &DigitVec2, y: &DigitVec2) -> DigitVec2 {
    let n = x.digits.len().max(y.digits.len());
    let digits = (1..=n).map(|j| (x.digit(j) + y.digit(j)) % 2).collect();
    DigitVec2 {
        digits: trim_u8(digits),
    }
}

fn balanced_mod3(v: i8) -> i8 {
    // Reduce into {-1, 0, 1}: 2 wraps to -1, -2 wraps to 1.
    match v {
        2 => -1,
        -2 => 1,
        d => d,
    }
}

/// Componentwise balanced addition mod 3 (no carry between indices).
pub fn vec_add3(x: &DigitVec3, y: &DigitVec3) -> DigitVec3 {
    let n = x.digits.len().max(y.digits.len());
    let digits = (1..=n)
        .map(|j| balanced_mod3(x.digit(j) + y.digit(j)))
        .collect();
    DigitVec3 {
        digits: trim_i8(digits),
    }
}

/// Componentwise scalar multiple by c in {-1, 0, 1}.
pub fn vec_scale3(c: i8, x: &DigitVec3) -> DigitVec3 {
    assert!((-1..=1).contains(&c), "scalar must be in {{-1,0,1}}");
    let digits = x.digits.iter().map(|d| c * d).collect();
    DigitVec3 {
        digits: trim_i8(digits),
    }
}

fn agreement_digits<I>(pairs: I) -> AgreementVector
where
    I: Iterator<Item = (i8, i8)>,
{
    let digits = pairs
        .map(|(a, b)| {
            if a == 1 && b == 1 {
                1
            } else if a == -1 && b == -1 {
                -1
            } else {
                0
            }
        })
        .collect();
    DigitVec3 {
        digits: trim_i8(digits),
    }
}

/// Agreement vector of two Z2 vectors.
pub fn agreement2(x: &DigitVec2, y: &DigitVec2) -> AgreementVector {
    let n = x.digits.len().max(y.digits.len());
    agreement_digits((1..=n).map(|j| (x.digit(j) as i8, y.digit(j) as i8)))
}

/// Agreement vector of two Z3 vectors.
pub fn agreement3(x: &DigitVec3, y: &DigitVec3) -> AgreementVector {
    let n = x.digits.len().max(y.digits.len());
    agreement_digits((1..=n).map(|j| (x.digit(j), y.digit(j))))
}

/// True iff x_j * y_j = 0 for every index j.
pub fn is_disjoint2(x: &DigitVec2, y: &DigitVec2) -> bool {
    let n = x.digits.len().max(y.digits.len());
    (1..=n).all(|j| x.digit(j) * y.digit(j) == 0)
}

/// True iff x_j * y_j = 0 for every index j.
pub fn is_disjoint3(x: &DigitVec3, y: &DigitVec3) -> bool {
    let n = x.digits.len().max(y.digits.len());
    (1..=n).all(|j| x.digit(j) * y.digit(j) == 0)
}

impl fmt::Display for DigitVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "0");
        }
        for d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for DigitVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.digits.is_empty() {
            return write!(f, "0");
        }
        for d in &self.digits {
            match d {
                -1 => write!(f, "T")?,
                d => write!(f, "{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DigitVec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitVec2({self})")
    }
}

impl fmt::Debug for DigitVec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DigitVec3({self})")
    }
}

impl FromStr for DigitVec2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty digit string".into(),
            });
        }
        let mut digits = Vec::with_capacity(s.len());
        for (i, c) in s.char_indices() {
            match c {
                '0' => digits.push(0),
                '1' => digits.push(1),
                _ => {
                    return Err(Error::Parse {
                        position: i,
                        message: format!("invalid Z2 digit {c:?}"),
                    })
                }
            }
        }
        Ok(DigitVec2 {
            digits: trim_u8(digits),
        })
    }
}

impl FromStr for DigitVec3 {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::Parse {
                position: 0,
                message: "empty digit string".into(),
            });
        }
        let mut digits = Vec::with_capacity(s.len());
        for (i, c) in s.char_indices() {
            match c {
                '0' => digits.push(0),
                '1' => digits.push(1),
                'T' => digits.push(-1),
                _ => {
                    return Err(Error::Parse {
                        position: i,
                        message: format!("invalid Z3 digit {c:?} (use 1, 0, T)"),
                    })
                }
            }
        }
        Ok(DigitVec3 {
            digits: trim_i8(digits),
        })
    }
}

/// All canonical Z2 vectors of support length at most `max_len`, in mask
/// order. 2^max_len vectors.
pub fn enumerate2(max_len: u32) -> Vec<DigitVec2> {
    assert!(max_len <= 24, "enumeration length out of desk scale");
    (0..(1u64 << max_len)).map(DigitVec2::from_mask).collect()
}

/// All canonical Z3 vectors of support length at most `max_len`, in
/// lexicographic digit order (digit at index 1 varies fastest, ordered
/// -1 < 0 < 1). 3^max_len vectors.
pub fn enumerate3(max_len: u32) -> Vec<DigitVec3> {
    assert!(max_len <= 15, "enumeration length out of desk scale");
    let total = 3u64.pow(max_len);
    let mut out = Vec::with_capacity(total as usize);
    for idx in 0..total {
        let mut digits = Vec::with_capacity(max_len as usize);
        let mut rest = idx;
        for _ in 0..max_len {
            digits.push((rest % 3) as i8 - 1);
            rest /= 3;
        }
        out.push(DigitVec3 {
            digits: trim_i8(digits),
        });
    }
    out
}
