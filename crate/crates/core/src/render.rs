//! Deterministic SVG and PGM emission of fractal approximants and linearity
//! point clouds.
//!
//! Output is byte-identical for identical jobs: no timestamps, no
//! randomness, fixed iteration orders. PGM pixels are decided by exact
//! membership of the pixel's center point; SVG coordinates are exact
//! decimal expansions where the rational terminates in base 10, otherwise
//! 12-significant-digit roundings (display only, never fed back into
//! logic).

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::digitvec::{DigitVec2, DigitVec3};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::fractal::{
    approximant_cells, sierpinski_member, snowflake_member_unchecked, ApproximantSpec, CellList,
    Fractal, Point,
};
use crate::numeral::{frac_value2, frac_value3, Base};

/// Output format selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ImageFormat {
    Svg,
    Pgm,
}

/// Rational bounding box; renders map it to the full pixel grid.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Viewport {
    pub min_x: Rational,
    pub min_y: Rational,
    pub max_x: Rational,
    pub max_y: Rational,
}

impl Viewport {
    pub fn new(min_x: Rational, min_y: Rational, max_x: Rational, max_y: Rational) -> Self {
        Viewport {
            min_x,
            min_y,
            max_x,
            max_y,
        }
    }

    /// The fractal's natural box: [0,1]^2 for the triangle, [-1/2,1/2]^2
    /// for the snowflake.
    pub fn natural(fractal: Fractal) -> Self {
        match fractal {
            Fractal::Sierpinski => Viewport::new(
                Rational::zero(),
                Rational::zero(),
                Rational::one(),
                Rational::one(),
            ),
            Fractal::Snowflake => Viewport::new(
                Rational::new(-1, 2),
                Rational::new(-1, 2),
                Rational::new(1, 2),
                Rational::new(1, 2),
            ),
        }
    }

    /// The natural box for a linearity cloud in the given base.
    pub fn natural_for_base(base: Base) -> Self {
        match base {
            Base::Two => Viewport::natural(Fractal::Sierpinski),
            Base::Balanced3 => Viewport::natural(Fractal::Snowflake),
        }
    }

    fn width_span(&self) -> Rational {
        &self.max_x - &self.min_x
    }

    fn height_span(&self) -> Rational {
        &self.max_y - &self.min_y
    }
}

/// What to draw: a fractal approximant or a linearity point cloud.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RenderTarget {
    Approximant(ApproximantSpec),
    Cloud { base: Base, len: u32 },
}

/// A complete, reproducible description of one image.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RenderJob {
    pub target: RenderTarget,
    pub format: ImageFormat,
    /// Pixels across; the image is square.
    pub width: u32,
    pub viewport: Viewport,
}

impl RenderJob {
    pub fn approximant(spec: ApproximantSpec, format: ImageFormat, width: u32) -> Self {
        RenderJob {
            target: RenderTarget::Approximant(spec),
            format,
            width,
            viewport: Viewport::natural(spec.fractal),
        }
    }

    pub fn cloud(base: Base, len: u32, format: ImageFormat, width: u32) -> Self {
        RenderJob {
            target: RenderTarget::Cloud { base, len },
            format,
            width,
            viewport: Viewport::natural_for_base(base),
        }
    }

    /// Interface-level invariants for user-supplied jobs. Internal callers
    /// (and some worked grid examples) use smaller widths directly.
    pub fn validate(&self) -> Result<()> {
        if self.width < 16 {
            return Err(Error::Domain(format!(
                "render width must be at least 16 pixels, got {}",
                self.width
            )));
        }
        if self.viewport.width_span().is_zero() || self.viewport.height_span().is_zero() {
            return Err(Error::Domain("viewport must have positive area".into()));
        }
        Ok(())
    }

    /// Renders to bytes in the job's format.
    pub fn render(&self) -> Result<Vec<u8>> {
        match self.format {
            ImageFormat::Svg => emit_svg(self).map(String::into_bytes),
            ImageFormat::Pgm => rasterize_pgm(self),
        }
    }
}

/// Cloud guard bounds: digit lengths above these would enumerate more than
/// ~half a million pairs per axis.
pub const MAX_CLOUD_LEN_BASE2: u32 = 12;
pub const MAX_CLOUD_LEN_BASE3: u32 = 8;

/// The linearity cloud: the point (value(x), value(y)) for every digit pair
/// whose agreement vector is empty, i.e. every pair passing the linearity
/// check. Generated index by index from the admissible digit combinations —
/// (0,0), (0,1), (1,0) over Z2 and the seven zero-agreement combinations
/// over Z3 — in fixed lexicographic order; 3^len or 7^len points.
pub fn cloud_points(base: Base, len: u32) -> Result<Vec<Point>> {
    match base {
        Base::Two => {
            if len > MAX_CLOUD_LEN_BASE2 {
                return Err(Error::Resource(format!(
                    "cloud length {len} exceeds the base-2 guard {MAX_CLOUD_LEN_BASE2}"
                )));
            }
            const COMBOS: [(u8, u8); 3] = [(0, 0), (0, 1), (1, 0)];
            let total = 3u64.pow(len);
            let mut out = Vec::with_capacity(total as usize);
            for idx in 0..total {
                let mut xd = Vec::with_capacity(len as usize);
                let mut yd = Vec::with_capacity(len as usize);
                let mut rest = idx;
                for _ in 0..len {
                    let (a, b) = COMBOS[(rest % 3) as usize];
                    xd.push(a);
                    yd.push(b);
                    rest /= 3;
                }
                let x = DigitVec2::new(xd).expect("digits are 0/1");
                let y = DigitVec2::new(yd).expect("digits are 0/1");
                debug_assert!(crate::egyptian::check_linear_z2(&x, &y).linear);
                out.push(Point::new(frac_value2(&x), frac_value2(&y)));
            }
            Ok(out)
        }
        Base::Balanced3 => {
            if len > MAX_CLOUD_LEN_BASE3 {
                return Err(Error::Resource(format!(
                    "cloud length {len} exceeds the base-3 guard {MAX_CLOUD_LEN_BASE3}"
                )));
            }
            const COMBOS: [(i8, i8); 7] = [
                (0, 0),
                (0, 1),
                (0, -1),
                (1, 0),
                (-1, 0),
                (1, -1),
                (-1, 1),
            ];
            let total = 7u64.pow(len);
            let mut out = Vec::with_capacity(total as usize);
            for idx in 0..total {
                let mut xd = Vec::with_capacity(len as usize);
                let mut yd = Vec::with_capacity(len as usize);
                let mut rest = idx;
                for _ in 0..len {
                    let (a, b) = COMBOS[(rest % 7) as usize];
                    xd.push(a);
                    yd.push(b);
                    rest /= 7;
                }
                let x = DigitVec3::new(xd).expect("digits are -1/0/1");
                let y = DigitVec3::new(yd).expect("digits are -1/0/1");
                debug_assert!(crate::digitvec::agreement3(&x, &y).is_empty());
                out.push(Point::new(frac_value3(&x), frac_value3(&y)));
            }
            Ok(out)
        }
    }
}

/// Ten to the `k` as a rational, for k possibly negative.
fn pow10(k: i32) -> Rational {
    let base = BigInt::from(10).pow(k.unsigned_abs());
    if k >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::from(1), base)
    }
}

/// Decimal rendering for SVG coordinates: exact when the denominator is of
/// the form 2^a * 5^b, otherwise rounded to 12 significant digits.
pub fn decimal_string(x: &Rational) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut rest = x.denom().clone();
    let mut a = 0u32;
    let mut b = 0u32;
    while (&rest % &two).is_zero() {
        rest /= &two;
        a += 1;
    }
    while (&rest % &five).is_zero() {
        rest /= &five;
        b += 1;
    }
    if rest == BigInt::from(1) {
        // terminating decimal with k = max(a, b) places
        let k = a.max(b);
        let scale = two.pow(k - a) * five.pow(k - b);
        let scaled = x.numer() * scale;
        return place_decimal(&scaled, k as i32);
    }
    // 12 significant digits: find e with 10^(e-1) <= |x| < 10^e
    let ax = x.abs();
    let mut e = 0i32;
    while ax.cmp_exact(&pow10(e)) != std::cmp::Ordering::Less {
        e += 1;
    }
    while ax.cmp_exact(&pow10(e - 1)) == std::cmp::Ordering::Less {
        e -= 1;
    }
    let places = 12 - e;
    let scaled = x * &pow10(places);
    // round half away from zero, deterministically
    let half = Rational::new(1, 2);
    let rounded = if scaled.is_negative() {
        (&scaled - &half).ceil_int()
    } else {
        (&scaled + &half).floor_int()
    };
    place_decimal(&rounded, places)
}

/// Renders `digits * 10^(-places)` with a decimal point, trimming trailing
/// fractional zeros.
fn place_decimal(digits: &BigInt, places: i32) -> String {
    let negative = digits.is_negative();
    let mut text = digits.abs().to_string();
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if places <= 0 {
        out.push_str(&text);
        out.extend(std::iter::repeat_n('0', (-places) as usize));
        return out;
    }
    let places = places as usize;
    if text.len() <= places {
        let pad = places - text.len();
        text = format!("{}{}", "0".repeat(pad + 1), text);
    }
    let split = text.len() - places;
    let (int_part, frac_part) = text.split_at(split);
    let frac_part = frac_part.trim_end_matches('0');
    out.push_str(int_part);
    if !frac_part.is_empty() {
        out.push('.');
        out.push_str(frac_part);
    }
    out
}

struct SvgMapper {
    viewport: Viewport,
    width: Rational,
}

impl SvgMapper {
    /// World x to SVG user units.
    fn x(&self, x: &Rational) -> String {
        let t = (x - &self.viewport.min_x) / self.viewport.width_span() * self.width.clone();
        decimal_string(&t)
    }

    /// World y to SVG user units, flipped so the image matches the usual
    /// mathematical orientation.
    fn y(&self, y: &Rational) -> String {
        let t = (&self.viewport.max_y - y) / self.viewport.height_span() * self.width.clone();
        decimal_string(&t)
    }
}

/// Emits the job as an SVG document: one `polygon` element per approximant
/// cell (3^n or 7^n of them), or one pixel-sized `rect` per cloud point.
pub fn emit_svg(job: &RenderJob) -> Result<String> {
    let mapper = SvgMapper {
        viewport: job.viewport.clone(),
        width: Rational::from_integer(job.width as i64),
    };
    let w = job.width;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{w}\" \
         viewBox=\"0 0 {w} {w}\">\n"
    ));
    match &job.target {
        RenderTarget::Approximant(spec) => {
            let cells = approximant_cells(spec)?;
            match &cells {
                CellList::Triangles(tris) => {
                    for cell in tris {
                        let x0 = &cell.corner.x;
                        let y0 = &cell.corner.y;
                        let x1 = x0 + &cell.side;
                        let y1 = y0 + &cell.side;
                        out.push_str(&format!(
                            "<polygon points=\"{},{} {},{} {},{}\" fill=\"#808080\"/>\n",
                            mapper.x(x0),
                            mapper.y(y0),
                            mapper.x(&x1),
                            mapper.y(y0),
                            mapper.x(x0),
                            mapper.y(&y1),
                        ));
                    }
                }
                CellList::Hexagons(hexes) => {
                    let outline = crate::fractal::h0_polygon();
                    for cell in hexes {
                        let points: Vec<String> = outline
                            .iter()
                            .map(|v| {
                                let px = &cell.center.x + &(&cell.scale * &v.x);
                                let py = &cell.center.y + &(&cell.scale * &v.y);
                                format!("{},{}", mapper.x(&px), mapper.y(&py))
                            })
                            .collect();
                        out.push_str(&format!(
                            "<polygon points=\"{}\" fill=\"#808080\"/>\n",
                            points.join(" ")
                        ));
                    }
                }
            }
        }
        RenderTarget::Cloud { base, len } => {
            let points = cloud_points(*base, *len)?;
            // one-user-unit marks: a pixel each at the job's width
            for p in &points {
                out.push_str(&format!(
                    "<rect x=\"{}\" y=\"{}\" width=\"1\" height=\"1\" fill=\"#808080\"/>\n",
                    mapper.x(&p.x),
                    mapper.y(&p.y),
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn clamp_cell(i: &BigInt, width: u32) -> u32 {
    use num_traits::ToPrimitive;
    if i.is_negative() {
        0
    } else {
        i.to_u32().map_or(width - 1, |v| v.min(width - 1))
    }
}

/// Rasterizes the job as a binary PGM (`P5`, 0 = dark, 255 = light).
///
/// Approximants: a pixel is dark iff its exact center point is a member at
/// the job's depth. Clouds: a pixel is dark iff it contains a cloud point.
pub fn rasterize_pgm(job: &RenderJob) -> Result<Vec<u8>> {
    let w = job.width as usize;
    let mut pixels = vec![255u8; w * w];
    let width_rat = Rational::from_integer(job.width as i64);
    match &job.target {
        RenderTarget::Approximant(spec) => {
            spec.cell_count()?; // same guard as cell enumeration
            let dx = job.viewport.width_span() / width_rat.clone();
            let dy = job.viewport.height_span() / width_rat.clone();
            let half = Rational::new(1, 2);
            for row in 0..w {
                // top row holds the highest y values
                let y = &job.viewport.max_y
                    - &((Rational::from_integer(row as i64) + half.clone()) * dy.clone());
                for col in 0..w {
                    let x = &job.viewport.min_x
                        + &((Rational::from_integer(col as i64) + half.clone()) * dx.clone());
                    let p = Point::new(x, y.clone());
                    let member = match spec.fractal {
                        Fractal::Sierpinski => sierpinski_member(&p, spec.depth).member,
                        Fractal::Snowflake => snowflake_member_unchecked(&p, spec.depth),
                    };
                    if member {
                        pixels[row * w + col] = 0;
                    }
                }
            }
        }
        RenderTarget::Cloud { base, len } => {
            let points = cloud_points(*base, *len)?;
            for p in &points {
                let tx = (&p.x - &job.viewport.min_x) / job.viewport.width_span()
                    * width_rat.clone();
                let ty = (&p.y - &job.viewport.min_y) / job.viewport.height_span()
                    * width_rat.clone();
                if tx.is_negative() || ty.is_negative() {
                    continue;
                }
                let col = clamp_cell(&tx.floor_int(), job.width) as usize;
                let row_up = clamp_cell(&ty.floor_int(), job.width) as usize;
                let row = w - 1 - row_up;
                pixels[row * w + col] = 0;
            }
        }
    }
    let mut out = format!("P5\n{} {}\n255\n", job.width, job.width).into_bytes();
    out.extend_from_slice(&pixels);
    Ok(out)
}

/// Convenience entry matching the CLI: renders the linearity cloud for one
/// base and digit length.
pub fn plot_linearity_cloud(
    base: Base,
    digit_len: u32,
    format: ImageFormat,
    width: u32,
) -> Result<Vec<u8>> {
    RenderJob::cloud(base, digit_len, format, width).render()
}
