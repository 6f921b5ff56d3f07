//! Exact membership oracles for the Sierpinski triangle and the hexagon
//! snowflake, their digit-condition counterparts, and approximant cell
//! enumeration.
//!
//! Geometry is decided with rational arithmetic only. Approximants are
//! closed sets: the seed triangle and hexagon are closed, and the two white
//! triangles of the hexagon are removed as open sets so their boundaries
//! remain. Membership at depth n works through the child preimages of the
//! iterated function system; a point on a shared boundary belongs to the
//! approximant if any branch accepts, and the trace records the first
//! accepting branch per level.

use std::fmt;
use std::str::FromStr;

use crate::digitvec::{is_disjoint2, DigitVec2, DigitVec3};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::numeral::{dual_representations2, dual_representations3, Expansion};

/// A point in the plane with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.x, self.y)
    }
}

impl FromStr for Point {
    type Err = Error;

    /// Parses the CLI form `p/q,p/q`.
    fn from_str(s: &str) -> Result<Self> {
        let comma = s.find(',').ok_or(Error::Parse {
            position: s.len(),
            message: "expected `x,y` with rational coordinates".into(),
        })?;
        let x: Rational = s[..comma].parse()?;
        let y: Rational = s[comma + 1..].parse().map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position + comma + 1,
                message,
            },
            other => other,
        })?;
        Ok(Point { x, y })
    }
}

/// Which fractal an approximant belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fractal {
    Sierpinski,
    Snowflake,
}

impl Fractal {
    /// Children per recursion level: 3 or 7.
    pub fn arity(self) -> u64 {
        match self {
            Fractal::Sierpinski => 3,
            Fractal::Snowflake => 7,
        }
    }
}

/// A finite approximant: fractal plus recursion depth.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ApproximantSpec {
    pub fractal: Fractal,
    pub depth: u32,
}

/// Cell-count guard for enumeration and rendering.
pub const MAX_CELLS: u64 = 10_000_000;

impl ApproximantSpec {
    pub fn new(fractal: Fractal, depth: u32) -> Self {
        ApproximantSpec { fractal, depth }
    }

    /// 3^depth or 7^depth, checked against [`MAX_CELLS`].
    pub fn cell_count(&self) -> Result<u64> {
        let mut count: u64 = 1;
        for _ in 0..self.depth {
            count = count.saturating_mul(self.fractal.arity());
            if count > MAX_CELLS {
                return Err(Error::Resource(format!(
                    "depth {} needs more than {MAX_CELLS} cells",
                    self.depth
                )));
            }
        }
        Ok(count)
    }
}

/// One triangle of a Sierpinski approximant: right-angle corner plus leg
/// length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleCell {
    pub corner: Point,
    pub side: Rational,
}

/// One hexagon cell of a snowflake approximant: center plus scale factor
/// (the cell is the seed polygon scaled by `scale` about the origin, then
/// translated to `center`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HexCell {
    pub center: Point,
    pub scale: Rational,
}

/// The exact cells of one approximant.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CellList {
    Triangles(Vec<TriangleCell>),
    Hexagons(Vec<HexCell>),
}

impl CellList {
    pub fn len(&self) -> usize {
        match self {
            CellList::Triangles(v) => v.len(),
            CellList::Hexagons(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Membership verdict plus, for members, the first accepting child index at
/// each level (outermost level first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Membership {
    pub member: bool,
    pub trace: Option<Vec<u8>>,
}

impl Membership {
    fn reject() -> Self {
        Membership {
            member: false,
            trace: None,
        }
    }
}

/// The seed triangle: x >= 0, y >= 0, x + y <= 1 (closed).
pub fn t0_member(p: &Point) -> bool {
    !p.x.is_negative() && !p.y.is_negative() && {
        let sum = &p.x + &p.y;
        sum.cmp_exact(&Rational::one()) != std::cmp::Ordering::Greater
    }
}

/// Sierpinski child translations, doubled: the preimage under child i is
/// (2x - t_x, 2y - t_y).
const SIERPINSKI_SHIFTS: [(i64, i64); 3] = [(0, 0), (1, 0), (0, 1)];

fn sierpinski_trace(p: &Point, depth: u32) -> Option<Vec<u8>> {
    // every approximant is contained in the seed triangle, so prune early
    if !t0_member(p) {
        return None;
    }
    if depth == 0 {
        return Some(Vec::new());
    }
    for (i, (tx, ty)) in SIERPINSKI_SHIFTS.iter().enumerate() {
        let q = Point::new(
            &p.x + &p.x - Rational::from_integer(*tx),
            &p.y + &p.y - Rational::from_integer(*ty),
        );
        if let Some(mut rest) = sierpinski_trace(&q, depth - 1) {
            rest.insert(0, i as u8);
            return Some(rest);
        }
    }
    None
}

/// Membership in the depth-n Sierpinski approximant (exact, closed sets).
pub fn sierpinski_member(p: &Point, depth: u32) -> Membership {
    match sierpinski_trace(p, depth) {
        Some(trace) => Membership {
            member: true,
            trace: Some(trace),
        },
        None => Membership::reject(),
    }
}

fn half() -> Rational {
    Rational::new(1, 2)
}

fn sixth() -> Rational {
    Rational::new(1, 6)
}

fn in_bounding_square(p: &Point) -> bool {
    p.x.abs().cmp_exact(&half()) != std::cmp::Ordering::Greater
        && p.y.abs().cmp_exact(&half()) != std::cmp::Ordering::Greater
}

fn h0_member_inner(p: &Point) -> bool {
    use std::cmp::Ordering::*;
    if !in_bounding_square(p) {
        return false;
    }
    let sum = &p.x + &p.y;
    if sum.abs().cmp_exact(&half()) == Greater {
        return false; // beyond the hexagon's two diagonal edges
    }
    // white triangles, removed as open sets
    let s = sixth();
    let inside_upper = p.x.cmp_exact(&s) == Greater
        && p.y.cmp_exact(&s) == Greater
        && sum.cmp_exact(&half()) == Less;
    let inside_lower = p.x.cmp_exact(&-&s) == Less
        && p.y.cmp_exact(&-&s) == Less
        && sum.cmp_exact(&-&half()) == Greater;
    !(inside_upper || inside_lower)
}

/// Membership in the seed hexagon-with-notches H0 by half-plane
/// inequalities. Errors for points outside the bounding square
/// [-1/2, 1/2]^2.
pub fn h0_member(p: &Point) -> Result<bool> {
    if !in_bounding_square(p) {
        return Err(Error::Domain(format!(
            "point {p} lies outside the bounding square [-1/2,1/2]^2"
        )));
    }
    Ok(h0_member_inner(p))
}

/// The balanced-ternary first digits a coordinate value can start with:
/// (1/6, 1/2] forces 1, [-1/2, -1/6) forces -1, the open middle forces 0,
/// and the boundaries +-1/6 admit two digits via their dual expansions.
fn first_digit_options(x: &Rational) -> &'static [i8] {
    use std::cmp::Ordering::*;
    let s = sixth();
    match x.cmp_exact(&s) {
        Greater => &[1],
        Equal => &[0, 1],
        Less => match x.cmp_exact(&-&s) {
            Greater => &[0],
            Equal => &[-1, 0],
            Less => &[-1],
        },
    }
}

/// Membership in H0 by the first-digit case analysis: a point is kept when
/// some pair of admissible first digits satisfies a*b = 0 or a + b = 0, or
/// when it sits on the closed hexagon edges x + y = +-1/2 (retained because
/// the white triangles are removed as open sets). Must agree with
/// [`h0_member`] everywhere; the internal-consistency tests enforce this.
pub fn h0_member_by_digit_regions(p: &Point) -> Result<bool> {
    use std::cmp::Ordering::*;
    if !in_bounding_square(p) {
        return Err(Error::Domain(format!(
            "point {p} lies outside the bounding square [-1/2,1/2]^2"
        )));
    }
    let sum = &p.x + &p.y;
    Ok(match sum.abs().cmp_exact(&half()) {
        Greater => false,
        Equal => true,
        Less => {
            let xs = first_digit_options(&p.x);
            let ys = first_digit_options(&p.y);
            xs.iter()
                .any(|a| ys.iter().any(|b| a * b == 0 || a + b == 0))
        }
    })
}

/// Snowflake child translations, tripled: the preimage under child i is
/// (3x - t_x, 3y - t_y).
const SNOWFLAKE_SHIFTS: [(i64, i64); 7] = [
    (0, 0),
    (1, 0),
    (0, 1),
    (1, -1),
    (-1, 0),
    (0, -1),
    (-1, 1),
];

fn snowflake_trace(p: &Point, depth: u32) -> Option<Vec<u8>> {
    // approximants decrease, so anything outside H0 is out at every depth
    if !h0_member_inner(p) {
        return None;
    }
    if depth == 0 {
        return Some(Vec::new());
    }
    let three = Rational::from_integer(3);
    for (i, (tx, ty)) in SNOWFLAKE_SHIFTS.iter().enumerate() {
        let q = Point::new(
            &p.x * &three - Rational::from_integer(*tx),
            &p.y * &three - Rational::from_integer(*ty),
        );
        if let Some(mut rest) = snowflake_trace(&q, depth - 1) {
            rest.insert(0, i as u8);
            return Some(rest);
        }
    }
    None
}

/// Membership in the depth-n snowflake approximant. Errors for points
/// outside the bounding square [-1/2, 1/2]^2.
pub fn snowflake_member(p: &Point, depth: u32) -> Result<Membership> {
    if !in_bounding_square(p) {
        return Err(Error::Domain(format!(
            "point {p} lies outside the bounding square [-1/2,1/2]^2"
        )));
    }
    Ok(match snowflake_trace(p, depth) {
        Some(trace) => Membership {
            member: true,
            trace: Some(trace),
        },
        None => Membership::reject(),
    })
}

/// Non-erroring snowflake membership for rasterization: points outside the
/// bounding square are simply not members.
pub(crate) fn snowflake_member_unchecked(p: &Point, depth: u32) -> bool {
    snowflake_trace(p, depth).is_some()
}

fn condition_holds<F>(x: &Expansion, y: &Expansion, admissible: F) -> bool
where
    F: Fn(i8, i8) -> bool,
{
    let horizon = x.prefix.len().max(y.prefix.len());
    for j in 1..=horizon {
        if !admissible(x.digit(j), y.digit(j)) {
            return false;
        }
    }
    // beyond the longest prefix both digit streams are constant
    admissible(x.tail.unwrap_or(0), y.tail.unwrap_or(0))
}

/// Digit condition for the Sierpinski triangle: x_j * y_j = 0 at every
/// index. With `allow_dual`, the condition may be met by any pair of
/// eventually-constant representations of the two coordinate values.
pub fn digit_member_sierpinski(x: &DigitVec2, y: &DigitVec2, allow_dual: bool) -> bool {
    if !allow_dual {
        return is_disjoint2(x, y);
    }
    let xr = dual_representations2(x);
    let yr = dual_representations2(y);
    xr.iter().any(|ex| {
        yr.iter()
            .any(|ey| condition_holds(ex, ey, |a, b| a * b == 0))
    })
}

/// Digit condition for the snowflake: at every index, x_j * y_j = 0 or
/// x_j + y_j = 0. With `allow_dual`, quantified over eventually-constant
/// representations (tails of all 1s or all -1s).
pub fn digit_member_snowflake(x: &DigitVec3, y: &DigitVec3, allow_dual: bool) -> bool {
    let finite_ok = {
        let n = x.len().max(y.len());
        (1..=n).all(|j| {
            let (a, b) = (x.digit(j), y.digit(j));
            a * b == 0 || a + b == 0
        })
    };
    if !allow_dual || finite_ok {
        return finite_ok;
    }
    let xr = dual_representations3(x);
    let yr = dual_representations3(y);
    xr.iter().any(|ex| {
        yr.iter()
            .any(|ey| condition_holds(ex, ey, |a, b| a * b == 0 || a + b == 0))
    })
}

/// Snowflake cell translations as exact vectors.
pub fn snowflake_translations() -> [Point; 7] {
    let third = Rational::new(1, 3);
    SNOWFLAKE_SHIFTS.map(|(tx, ty)| {
        Point::new(
            Rational::from_integer(tx) * &third,
            Rational::from_integer(ty) * &third,
        )
    })
}

/// Explicit list of all depth-n cells, in breadth-first child order.
pub fn approximant_cells(spec: &ApproximantSpec) -> Result<CellList> {
    let count = spec.cell_count()? as usize;
    match spec.fractal {
        Fractal::Sierpinski => {
            let mut cells = vec![TriangleCell {
                corner: Point::new(Rational::zero(), Rational::zero()),
                side: Rational::one(),
            }];
            for _ in 0..spec.depth {
                let mut next = Vec::with_capacity(cells.len() * 3);
                for cell in &cells {
                    let h = &cell.side * &half();
                    next.push(TriangleCell {
                        corner: cell.corner.clone(),
                        side: h.clone(),
                    });
                    next.push(TriangleCell {
                        corner: Point::new(&cell.corner.x + &h, cell.corner.y.clone()),
                        side: h.clone(),
                    });
                    next.push(TriangleCell {
                        corner: Point::new(cell.corner.x.clone(), &cell.corner.y + &h),
                        side: h,
                    });
                }
                cells = next;
            }
            debug_assert_eq!(cells.len(), count);
            Ok(CellList::Triangles(cells))
        }
        Fractal::Snowflake => {
            let translations = snowflake_translations();
            let third = Rational::new(1, 3);
            let mut cells = vec![HexCell {
                center: Point::new(Rational::zero(), Rational::zero()),
                scale: Rational::one(),
            }];
            for _ in 0..spec.depth {
                let mut next = Vec::with_capacity(cells.len() * 7);
                for cell in &cells {
                    for t in &translations {
                        next.push(HexCell {
                            center: Point::new(
                                &cell.center.x + &(&cell.scale * &t.x),
                                &cell.center.y + &(&cell.scale * &t.y),
                            ),
                            scale: &cell.scale * &third,
                        });
                    }
                }
                cells = next;
            }
            debug_assert_eq!(cells.len(), count);
            Ok(CellList::Hexagons(cells))
        }
    }
}

/// The twelve vertices of the seed polygon H0 (the hexagon with the two
/// white notches), counterclockwise.
pub fn h0_polygon() -> Vec<Point> {
    let r = |n: i64, d: i64| Rational::new(n, d);
    [
        (r(1, 2), r(0, 1)),
        (r(1, 3), r(1, 6)),
        (r(1, 6), r(1, 6)),
        (r(1, 6), r(1, 3)),
        (r(0, 1), r(1, 2)),
        (r(-1, 2), r(1, 2)),
        (r(-1, 2), r(0, 1)),
        (r(-1, 3), r(-1, 6)),
        (r(-1, 6), r(-1, 6)),
        (r(-1, 6), r(-1, 3)),
        (r(0, 1), r(-1, 2)),
        (r(1, 2), r(-1, 2)),
    ]
    .into_iter()
    .map(|(x, y)| Point::new(x, y))
    .collect()
}
