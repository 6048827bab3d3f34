//! Skew-symmetrizable exchange matrices, the degree matrix, and matrix
//! mutation.

use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix must be square, got {0} rows of width {1}")]
    NotSquare(usize, usize),
    #[error("supplied skew-symmetrizer is not valid for this matrix")]
    BadSymmetrizer,
    #[error("mutation direction {0} out of range for rank {1}")]
    DirectionOutOfRange(usize, usize),
}

/// Positive diagonal degree matrix `D = diag(d_1, ..., d_n)`, derived from
/// the degrees of the exchange polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMatrix {
    degrees: Vec<u64>,
}

impl DegreeMatrix {
    pub fn new(degrees: Vec<u64>) -> Self {
        assert!(degrees.iter().all(|&d| d >= 1), "degrees must be positive");
        DegreeMatrix { degrees }
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.degrees[i]
    }
}

/// An `n x n` integer exchange matrix, checked skew-symmetrizable at
/// construction: a bounded search looks for a positive diagonal `S` with
/// `S*B` skew-symmetric. The search can fail for exotic user input, in
/// which case the matrix is kept but marked unverified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExchangeMatrix {
    n: usize,
    entries: Vec<BigInt>,
    symmetrizer: Option<Vec<BigInt>>,
}

const SYMMETRIZER_SEARCH_MAX: u64 = 8;

impl ExchangeMatrix {
    /// Build from rows, searching for a skew-symmetrizer with diagonal
    /// entries up to 8.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(MatrixError::NotSquare(n, row.len()));
            }
        }
        let entries: Vec<BigInt> = rows
            .into_iter()
            .flatten()
            .map(BigInt::from)
            .collect();
        let mut m = ExchangeMatrix {
            n,
            entries,
            symmetrizer: None,
        };
        m.symmetrizer = m.search_symmetrizer();
        Ok(m)
    }

    /// Build with an explicitly supplied skew-symmetrizer, validated exactly.
    pub fn with_symmetrizer(rows: Vec<Vec<i64>>, s: Vec<u64>) -> Result<Self, MatrixError> {
        let mut m = Self::new(rows)?;
        let s: Vec<BigInt> = s.into_iter().map(BigInt::from).collect();
        if s.len() != m.n || !m.is_symmetrizer(&s) {
            return Err(MatrixError::BadSymmetrizer);
        }
        m.symmetrizer = Some(s);
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Row-major entry list.
    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    /// The verified skew-symmetrizer, if the bounded search found one.
    pub fn symmetrizer(&self) -> Option<&[BigInt]> {
        self.symmetrizer.as_deref()
    }

    pub fn is_symmetrizer(&self, s: &[BigInt]) -> bool {
        if s.len() != self.n || s.iter().any(|v| v <= &BigInt::zero()) {
            return false;
        }
        for i in 0..self.n {
            for j in 0..self.n {
                if &s[i] * self.get(i, j) != -(&s[j] * self.get(j, i)) {
                    return false;
                }
            }
        }
        true
    }

    fn search_symmetrizer(&self) -> Option<Vec<BigInt>> {
        // The identity covers the skew-symmetric case without a search.
        let identity = vec![BigInt::from(1); self.n];
        if self.is_symmetrizer(&identity) {
            return Some(identity);
        }
        let mut s = vec![1u64; self.n];
        loop {
            let cand: Vec<BigInt> = s.iter().map(|&v| BigInt::from(v)).collect();
            if self.is_symmetrizer(&cand) {
                return Some(cand);
            }
            // Odometer over [1, SYMMETRIZER_SEARCH_MAX]^n.
            let mut i = 0;
            loop {
                if i == self.n {
                    return None;
                }
                if s[i] < SYMMETRIZER_SEARCH_MAX {
                    s[i] += 1;
                    break;
                }
                s[i] = 1;
                i += 1;
            }
        }
    }

    pub fn neg(&self) -> ExchangeMatrix {
        ExchangeMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| -e).collect(),
            symmetrizer: self.symmetrizer.clone(),
        }
    }

    /// Row-major entries of the product `B * D`.
    pub fn times_degree(&self, d: &DegreeMatrix) -> Vec<BigInt> {
        assert_eq!(d.rank(), self.n);
        let mut out = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.push(self.get(i, j) * BigInt::from(d.degree(j)));
            }
        }
        out
    }
}

impl fmt::Display for ExchangeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Matrix mutation in direction `k` (zero-based):
/// `b'_ij = -b_ij` when `i = k` or `j = k`, and otherwise
/// `b_ij + d_k([b_ik]_+ b_kj + b_ik [-b_kj]_+)`.
pub fn mutate_matrix(b: &ExchangeMatrix, d: &DegreeMatrix, k: usize) -> ExchangeMatrix {
    assert!(k < b.rank(), "mutation direction out of range");
    assert_eq!(d.rank(), b.rank());
    let n = b.rank();
    let dk = BigInt::from(d.degree(k));
    let plus = |v: &BigInt| -> BigInt {
        if v > &BigInt::zero() {
            v.clone()
        } else {
            BigInt::zero()
        }
    };
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let bij = b.get(i, j);
            if i == k || j == k {
                entries.push(-bij);
            } else {
                let bik = b.get(i, k);
                let bkj = b.get(k, j);
                entries.push(bij + &dk * (plus(bik) * bkj + bik * plus(&-bkj)));
            }
        }
    }
    let out = ExchangeMatrix {
        n,
        entries,
        symmetrizer: b.symmetrizer.clone(),
    };
    // Mutation preserves any skew-symmetrizer of the input.
    debug_assert!(out
        .symmetrizer
        .as_ref()
        .is_none_or(|s| out.is_symmetrizer(s)));
    out
}

/// The two `B*D` classes observed across the seed registry, plus everything
/// else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BdClass {
    /// `[[0,2,-2],[-2,0,2],[2,-2,0]]` (the cubic rows)
    Cubic,
    /// `[[0,1,-1],[-4,0,2],[4,-2,0]]` (the quartic rows)
    Quartic,
    Other,
}

impl BdClass {
    pub fn classify(bd: &[BigInt]) -> BdClass {
        let cubic: Vec<BigInt> = [0, 2, -2, -2, 0, 2, 2, -2, 0]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        let quartic: Vec<BigInt> = [0, 1, -1, -4, 0, 2, 4, -2, 0]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        if bd == cubic.as_slice() {
            BdClass::Cubic
        } else if bd == quartic.as_slice() {
            BdClass::Quartic
        } else {
            BdClass::Other
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            BdClass::Cubic => "cubic",
            BdClass::Quartic => "quartic",
            BdClass::Other => "other",
        }
    }
}

impl fmt::Display for BdClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
