//! Exact rational scalars, vectors and matrices.
//!
//! Scalars are [`BigRational`] values, which `num-rational` keeps reduced
//! with a positive denominator after every operation. Linear algebra runs
//! fraction-free on integer-scaled rows (Bareiss) so intermediate entries
//! stay bounded by minors of the input.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;
pub type RatVector = Vec<Scalar>;

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int_vector(values: &[i64]) -> RatVector {
    values.iter().map(|&v| int(v)).collect()
}

/// True when `q` is in lowest terms with a positive denominator.
pub fn is_canonical(q: &Scalar) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

/// Parses `p/q` or `p`. Non-reduced input is accepted and reduced.
pub fn parse_scalar(text: &str) -> std::result::Result<Scalar, String> {
    let text = text.trim();
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|_| format!("invalid integer `{numer}`"))?;
    let denom: BigInt = denom
        .parse()
        .map_err(|_| format!("invalid integer `{denom}`"))?;
    if denom.is_zero() {
        return Err("zero denominator".to_string());
    }
    Ok(Scalar::new(numer, denom))
}

/// Canonical text form: `p/q`, with `/q` omitted when `q = 1`.
pub fn format_scalar(q: &Scalar) -> String {
    q.to_string()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> RatVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Scalar], k: &Scalar) -> RatVector {
    a.iter().map(|x| x * k).collect()
}

pub fn is_integral(v: &[Scalar]) -> bool {
    v.iter().all(|x| x.is_integer())
}

/// Multiplies a rational row by the lcm of its denominators.
/// Returns the integer row and the (positive) multiplier.
pub fn clear_denominators(row: &[Scalar]) -> (Vec<BigInt>, BigInt) {
    let lcm = row
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = row
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    (ints, lcm)
}

pub fn gcd_of(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Divides an integer vector by the gcd of its entries (no-op on zero).
pub fn make_primitive(values: &mut [BigInt]) {
    let g = gcd_of(values);
    if !g.is_zero() && !g.is_one() {
        for v in values.iter_mut() {
            *v /= &g;
        }
    }
}

/// Bareiss determinant of an integer matrix, consuming the rows.
pub fn int_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Bareiss determinant in `i128`; `None` on overflow.
pub fn small_determinant(m: &mut [Vec<i128>]) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j]
                    .checked_mul(m[k][k])?
                    .checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = t / prev;
            }
        }
        prev = m[k][k];
    }
    Some(sign * m[n - 1][n - 1])
}

/// Rank of a set of rational rows.
pub fn rank(rows: &[RatVector]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r).0).collect();
    row_echelon(&mut m).len()
}

/// Pivot columns of an integer matrix (one per unit of rank), in order.
pub fn pivot_columns(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut m = rows.to_vec();
    row_echelon(&mut m)
}

/// Fraction-free forward elimination. Returns the pivot columns; rows are
/// permuted so that the first `pivots.len()` rows are the echelon rows.
fn row_echelon(m: &mut [Vec<BigInt>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).filter(|&i| !m[i][c].is_zero()).max_by(|&a, &b| {
            m[a][c].magnitude().cmp(m[b][c].magnitude()).then(b.cmp(&a))
        }) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &m[i][j] * &m[r][c] - &m[i][c] * &m[r][j];
                m[i][j] = t / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        // Entries left of the pivot in the pivot row are already zero.
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<RatVector>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n_rows,
            cols,
            data,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| int_vector(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<RatVector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &Scalar> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<RatVector> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn determinant(&self) -> Result<Scalar> {
        determinant(self)
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant. Rows are scaled to integers, the Bareiss determinant
/// taken, and the scaling divided back out.
pub fn determinant(a: &RatMatrix) -> Result<Scalar> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows(),
            found: a.cols(),
        });
    }
    let mut scale = BigInt::one();
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let (ints, lcm) = clear_denominators(a.row(i));
        scale *= lcm;
        rows.push(ints);
    }
    Ok(Scalar::new(int_determinant(rows), scale))
}

/// Solves `a · x = rhs` exactly.
pub fn solve_linear_system(a: &RatMatrix, rhs: &[Scalar]) -> Result<RatVector> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.cols(),
        });
    }
    if rhs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: rhs.len(),
        });
    }
    // Augmented integer rows; row scaling does not change the solution.
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = a.row(i).to_vec();
            row.push(rhs[i].clone());
            clear_denominators(&row).0
        })
        .collect();
    let pivots = row_echelon(&mut m);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::SingularMatrix);
    }
    let mut x = vec![Scalar::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Scalar::from_integer(m[i][n].clone());
        for j in i + 1..n {
            acc -= Scalar::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Scalar::from_integer(m[i][i].clone());
    }
    Ok(x)
}

/// Rounds `q` to `digits` significant decimal digits, ties to even, and
/// renders it in plain positional notation.
pub fn to_decimal_string(q: &Scalar, digits: usize) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let negative = q.is_negative();
    let abs = q.abs();
    let ten = BigInt::from(10);
    // Decimal exponent e with 10^e <= abs < 10^(e+1).
    let mut e = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    let pow = |k: i64| -> Scalar {
        if k >= 0 {
            Scalar::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Scalar::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while abs >= pow(e + 1) {
        e += 1;
    }
    while abs < pow(e) {
        e -= 1;
    }
    // Scale so the integer part carries exactly `digits` digits.
    let shift = digits as i64 - 1 - e;
    let scaled = &abs * pow(shift);
    let floor = scaled.floor().to_integer();
    let frac = &scaled - Scalar::from_integer(floor.clone());
    let half = ratio(1, 2);
    let mut mantissa = if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    };
    let mut shift = shift;
    if mantissa.to_string().len() > digits {
        // Rounding carried into a new leading digit (e.g. 9.99 -> 10.0).
        mantissa /= 10;
        shift -= 1;
    }
    let text = mantissa.to_string();
    let body = if shift <= 0 {
        let zeros = "0".repeat((-shift) as usize);
        format!("{text}{zeros}")
    } else {
        let shift = shift as usize;
        let (int_part, frac_part) = if text.len() > shift {
            let split = text.len() - shift;
            (text[..split].to_string(), text[split..].to_string())
        } else {
            ("0".to_string(), format!("{}{}", "0".repeat(shift - text.len()), text))
        };
        format!("{int_part}.{frac_part}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Lossy conversion for logging and display.
pub fn to_f64(q: &Scalar) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}
