//! Dense exact matrices over the rationals: arithmetic, reduced row echelon
//! form, linear solving, and minimal polynomials via Krylov dependence.

use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::rat::{parse_rat, rat_to_string, ri, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>, // row-major
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rat::one();
        }
        m
    }

    /// r·I.
    pub fn scalar(n: usize, r: &Rat) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.entries[i * n + i] = r.clone();
        }
        m
    }

    pub fn diagonal(values: &[Rat]) -> Self {
        let n = values.len();
        let mut m = Self::zero(n, n);
        for (i, v) in values.iter().enumerate() {
            m.entries[i * n + i] = v.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Input("matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        if cols == 0 {
            return Err(Error::Input("matrix needs at least one column".into()));
        }
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Input("matrix rows must have equal length".into()));
        }
        let nrows = rows.len();
        Ok(QMatrix {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| ri(v)).collect())
                .collect(),
        )
        .expect("literal matrix is rectangular")
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        QMatrix {
            rows,
            cols,
            entries,
        }
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

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.entries[i * self.cols + j] = v;
    }

    /// Row-major flattening, the coordinate vector used for span computations.
    pub fn vectorize(&self) -> Vec<Rat> {
        self.entries.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// True for r·I (including the zero matrix).
    pub fn is_scalar(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let d = self.at(0, 0);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let want_diag = i == j;
                let e = self.at(i, j);
                if want_diag && e != d {
                    return false;
                }
                if !want_diag && !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Input(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &Rat) -> Self {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Input(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &out.entries[i * out.cols + j] + &(a * b);
                    out.entries[i * out.cols + j] = v;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Input("matrix power requires a square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Reduced row echelon form together with the rank and pivot columns.
    pub fn rref(&self) -> (Self, usize, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = match (row..m.rows).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    m.entries.swap(row * m.cols + j, pivot_row * m.cols + j);
                }
            }
            let inv = Rat::one() / m.at(row, col).clone();
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j) - &(&factor * m.at(row, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, row, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Solve A·x = b. Returns one exact solution when the system is
    /// consistent, with all free variables set to zero; `None` otherwise.
    pub fn solve_linear(&self, b: &[Rat]) -> Result<Option<Vec<Rat>>> {
        if b.len() != self.rows {
            return Err(Error::Input(format!(
                "right-hand side has length {}, expected {}",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zero(self.rows, self.cols + 1);
        for (i, rhs) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, rhs.clone());
        }
        let (red, _, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = red.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Exact inverse; `None` when singular.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if !self.is_square() {
            return Err(Error::Input("inverse requires a square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, Rat::one());
        }
        let (red, _, pivots) = aug.rref();
        if pivots.iter().filter(|&&c| c < n).count() < n {
            return Ok(None);
        }
        let mut inv = Self::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, red.at(i, n + j).clone());
            }
        }
        Ok(Some(inv))
    }

    /// Monic polynomial of least degree annihilating the matrix, found as the
    /// first linear dependence among the vectorized powers I, M, M², ...
    pub fn min_poly(&self) -> Result<UniPoly> {
        if !self.is_square() {
            return Err(Error::Input(
                "minimal polynomial requires a square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut tracker = SpanTracker::new(n * n);
        let mut power = Self::identity(n);
        loop {
            match tracker.insert(power.vectorize()) {
                Insertion::Dependent(comb) => {
                    let k = comb.len();
                    let mut coeffs: Vec<Rat> = comb.into_iter().map(|c| -c).collect();
                    coeffs.push(Rat::one());
                    debug_assert_eq!(coeffs.len(), k + 1);
                    return Ok(UniPoly::new(coeffs));
                }
                Insertion::Independent => {}
            }
            power = power.mul(self)?;
        }
    }

    /// A matrix is diagonalizable exactly when its minimal polynomial is
    /// separable.
    pub fn is_diagonalizable(&self) -> Result<bool> {
        let mu = self.min_poly()?;
        if mu.degree() == Some(1) {
            return Ok(true);
        }
        mu.is_separable()
    }
}

/// Evaluate a polynomial at a square matrix (Horner).
pub fn apply_poly(p: &UniPoly, m: &QMatrix) -> Result<QMatrix> {
    if !m.is_square() {
        return Err(Error::Input(
            "polynomial evaluation requires a square matrix".into(),
        ));
    }
    let n = m.rows();
    let mut acc = QMatrix::zero(n, n);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(m)?;
        acc = acc.add(&QMatrix::scalar(n, c))?;
    }
    Ok(acc)
}

/// Incremental row space with dependence tracking: rows are kept reduced, and
/// each stores its expression in terms of the inserted vectors, so the first
/// dependent insertion yields its combination over the previous ones.
pub(crate) struct SpanTracker {
    width: usize,
    inserted: usize,
    rows: Vec<TrackedRow>,
}

struct TrackedRow {
    pivot: usize,
    vec: Vec<Rat>,
    comb: Vec<Rat>,
}

pub(crate) enum Insertion {
    Independent,
    /// Coefficients expressing the rejected vector over the previously
    /// inserted ones (length = number of prior insertions).
    Dependent(Vec<Rat>),
}

impl SpanTracker {
    pub fn new(width: usize) -> Self {
        SpanTracker {
            width,
            inserted: 0,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, mut v: Vec<Rat>) -> Insertion {
        assert_eq!(v.len(), self.width, "span vectors must share a width");
        let mut comb = vec![Rat::zero(); self.inserted + 1];
        comb[self.inserted] = Rat::one();
        for row in &self.rows {
            let factor = v[row.pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(&row.vec) {
                *a = &*a - &(&factor * b);
            }
            for (a, b) in comb.iter_mut().zip(&row.comb) {
                *a = &*a - &(&factor * b);
            }
        }
        let pivot = match v.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => {
                // v_k = Σ (−comb_j)·v_j over the prior insertions.
                let deps = comb[..self.inserted].iter().map(|c| -c.clone()).collect();
                self.inserted += 1;
                return Insertion::Dependent(deps);
            }
        };
        let inv = Rat::one() / v[pivot].clone();
        for a in v.iter_mut() {
            *a = &*a * &inv;
        }
        for a in comb.iter_mut() {
            *a = &*a * &inv;
        }
        // Back-reduce existing rows to keep entries small.
        for row in &mut self.rows {
            let factor = row.vec[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (a, b) in row.vec.iter_mut().zip(&v) {
                *a = &*a - &(&factor * b);
            }
            row.comb.resize(self.inserted + 1, Rat::zero());
            for (a, b) in row.comb.iter_mut().zip(&comb) {
                *a = &*a - &(&factor * b);
            }
        }
        for row in &mut self.rows {
            row.comb.resize(self.inserted + 1, Rat::zero());
        }
        self.rows.push(TrackedRow {
            pivot,
            vec: v,
            comb,
        });
        self.rows.sort_by_key(|r| r.pivot);
        self.inserted += 1;
        Insertion::Independent
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| rat_to_string(self.at(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| rat_to_string(self.at(i, j)))
                    .collect()
            })
            .collect();
        MatrixWire {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = MatrixWire::deserialize(deserializer)?;
        if wire.rows == 0 || wire.cols == 0 {
            return Err(D::Error::custom("matrix dimensions must be positive"));
        }
        if wire.entries.len() != wire.rows {
            return Err(D::Error::custom(format!(
                "expected {} rows, found {}",
                wire.rows,
                wire.entries.len()
            )));
        }
        let mut entries = Vec::with_capacity(wire.rows * wire.cols);
        for row in &wire.entries {
            if row.len() != wire.cols {
                return Err(D::Error::custom(format!(
                    "expected {} columns, found a row of {}",
                    wire.cols,
                    row.len()
                )));
            }
            for cell in row {
                entries.push(parse_rat(cell).map_err(|e| D::Error::custom(e.to_string()))?);
            }
        }
        Ok(QMatrix {
            rows: wire.rows,
            cols: wire.cols,
            entries,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_multiplicative_unit() {
        let m = QMatrix::from_int_rows(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(QMatrix::identity(3).mul(&m).unwrap(), m);
        assert_eq!(m.mul(&QMatrix::identity(3)).unwrap(), m);
    }

    #[test]
    fn add_and_scale() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let twice = m.add(&m).unwrap();
        assert_eq!(twice, m.scale(&ri(2)));
        assert!(m.add(&m.scale(&ri(-1))).unwrap().is_zero());
        assert!(m.add(&QMatrix::identity(3)).is_err());
    }

    #[test]
    fn rref_examples() {
        let (r, rank, pivots) = QMatrix::identity(4).rref();
        assert_eq!(r, QMatrix::identity(4));
        assert_eq!((rank, pivots), (4, vec![0, 1, 2, 3]));

        let z = QMatrix::zero(2, 3);
        let (r, rank, pivots) = z.rref();
        assert_eq!(r, z);
        assert_eq!((rank, pivots.len()), (0, 0));

        let m = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let (r, rank, _) = m.rref();
        assert_eq!(r, QMatrix::from_int_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(rank, 1);
    }

    #[test]
    fn solve_examples() {
        let id = QMatrix::identity(2);
        let b = vec![ri(3), ri(-5)];
        assert_eq!(id.solve_linear(&b).unwrap(), Some(b.clone()));

        let m = QMatrix::from_int_rows(&[&[1, 1], &[2, 2]]);
        assert_eq!(m.solve_linear(&[ri(1), ri(3)]).unwrap(), None);
        // free variable pinned to zero
        assert_eq!(
            m.solve_linear(&[ri(1), ri(2)]).unwrap(),
            Some(vec![ri(1), ri(0)])
        );
        assert!(m.solve_linear(&[ri(1)]).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[3, 5]]);
        let inv = m.inverse().unwrap().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), QMatrix::identity(2));
        let singular = QMatrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.inverse().unwrap(), None);
    }

    #[test]
    fn min_poly_examples() {
        // identity → t − 1
        assert_eq!(
            QMatrix::identity(4).min_poly().unwrap(),
            UniPoly::from_ints(&[-1, 1])
        );
        // zero → t
        assert_eq!(
            QMatrix::zero(3, 3).min_poly().unwrap(),
            UniPoly::from_ints(&[0, 1])
        );
        // nilpotent of index 2 → t²
        let a = QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert_eq!(a.min_poly().unwrap(), UniPoly::from_ints(&[0, 0, 1]));
        assert!(QMatrix::zero(2, 3).min_poly().is_err());
    }

    #[test]
    fn min_poly_annihilates_and_is_minimal() {
        let m = QMatrix::from_int_rows(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let mu = m.min_poly().unwrap();
        // (t−2)²(t−3)
        assert_eq!(mu.degree(), Some(3));
        assert!(apply_poly(&mu, &m).unwrap().is_zero());
        // no lower-degree monic annihilator: powers I, M, M² stay independent
        let mut tracker = SpanTracker::new(9);
        for k in 0..3 {
            match tracker.insert(m.pow(k).unwrap().vectorize()) {
                Insertion::Independent => {}
                Insertion::Dependent(_) => panic!("premature dependence"),
            }
        }
    }

    #[test]
    fn min_poly_is_similarity_invariant() {
        let m = QMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 4]]);
        let s = QMatrix::from_int_rows(&[&[1, 2, 0], &[0, 1, 3], &[1, 0, 1]]);
        let s_inv = s.inverse().unwrap().unwrap();
        let conj = s.mul(&m).unwrap().mul(&s_inv).unwrap();
        assert_eq!(conj.min_poly().unwrap(), m.min_poly().unwrap());
    }

    #[test]
    fn diagonalizability() {
        assert!(QMatrix::diagonal(&[ri(1), ri(2), ri(3)])
            .is_diagonalizable()
            .unwrap());
        let a = QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(!a.is_diagonalizable().unwrap());
        // Jordan block with rational eigenvalue, conjugated
        let j = QMatrix::from_int_rows(&[&[5, 1], &[0, 5]]);
        let s = QMatrix::from_int_rows(&[&[2, 1], &[1, 1]]);
        let s_inv = s.inverse().unwrap().unwrap();
        let m = s.mul(&j).unwrap().mul(&s_inv).unwrap();
        assert!(!m.is_diagonalizable().unwrap());
    }

    #[test]
    fn apply_poly_matches_powers() {
        let m = QMatrix::from_int_rows(&[&[1, 2], &[0, 3]]);
        let p = UniPoly::from_ints(&[2, -3, 1]); // t² − 3t + 2
        let direct = m
            .pow(2)
            .unwrap()
            .add(&m.scale(&ri(-3)))
            .unwrap()
            .add(&QMatrix::scalar(2, &ri(2)))
            .unwrap();
        assert_eq!(apply_poly(&p, &m).unwrap(), direct);
    }

    #[test]
    fn matrix_json_round_trip() {
        let m = QMatrix::from_int_rows(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(
            json,
            r#"{"rows":3,"cols":3,"entries":[["0","1","0"],["0","0","0"],["0","0","0"]]}"#
        );
        let back: QMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        assert!(
            serde_json::from_str::<QMatrix>(r#"{"rows":2,"cols":2,"entries":[["1","2"]]}"#)
                .is_err()
        );
        assert!(
            serde_json::from_str::<QMatrix>(r#"{"rows":1,"cols":2,"entries":[["1"]]}"#).is_err()
        );
    }
}
