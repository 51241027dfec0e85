use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{random_matrix, FieldSpec, Matrix};

/// Dimension vector `(dim U, dim V)` at vertices 1 and 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    pub d1: usize,
    pub d2: usize,
}

impl DimVector {
    pub fn new(d1: usize, d2: usize) -> Self {
        DimVector { d1, d2 }
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.d1, self.d2)
    }
}

/// Representation `(U, V, c)` of the `n`-Kronecker quiver: `U` sits at
/// vertex 1, `V` at vertex 2 and `c: V ⊗ W -> U` is stored as the `n`
/// components `c_j = c(- ⊗ w_j): V -> U`, each a `d1 x d2` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KroneckerRep {
    n: usize,
    field: FieldSpec,
    d1: usize,
    d2: usize,
    maps: Vec<Matrix>,
}

impl fmt::Debug for KroneckerRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "KroneckerRep(n={}, dim={}, maps={:?})", self.n, self.dim(), self.maps)
    }
}

impl KroneckerRep {
    pub fn new(n: usize, field: FieldSpec, d1: usize, d2: usize, maps: Vec<Matrix>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("the Kronecker quiver needs n >= 1 arrows".into()));
        }
        if maps.len() != n {
            return Err(Error::DimensionMismatch(format!("{} arrow matrices for n = {n}", maps.len())));
        }
        for (j, m) in maps.iter().enumerate() {
            if m.rows() != d1 || m.cols() != d2 {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} is {}x{}, expected {d1}x{d2}",
                    j + 1,
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(Error::InvalidField(format!("arrow {} is over {}", j + 1, m.field())));
            }
        }
        Ok(KroneckerRep { n, field, d1, d2, maps })
    }

    pub fn zero(n: usize, field: FieldSpec) -> Self {
        Self::with_dims(n, field, 0, 0)
    }

    fn with_dims(n: usize, field: FieldSpec, d1: usize, d2: usize) -> Self {
        KroneckerRep { n, field, d1, d2, maps: vec![Matrix::zeros(field, d1, d2); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }
    pub fn d1(&self) -> usize {
        self.d1
    }
    pub fn d2(&self) -> usize {
        self.d2
    }
    pub fn dim(&self) -> DimVector {
        DimVector::new(self.d1, self.d2)
    }
    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
    pub fn is_zero(&self) -> bool {
        self.d1 == 0 && self.d2 == 0
    }

    /// `c` as a `d1 x (d2·n)` matrix on the basis `v_i ⊗ w_j` (index `i·n + j`).
    pub fn flat(&self) -> Matrix {
        let n = self.n;
        Matrix::from_fn(self.field, self.d1, self.d2 * n, |r, c| self.maps[c % n].get(r, c / n).clone())
    }

    /// Inverse of [`flat`](Self::flat).
    pub fn from_flat(n: usize, flat: &Matrix) -> Result<Self> {
        if !flat.cols().is_multiple_of(n) {
            return Err(Error::DimensionMismatch(format!("{} columns is not a multiple of n = {n}", flat.cols())));
        }
        let d2 = flat.cols() / n;
        let maps = (0..n)
            .map(|j| Matrix::from_fn(flat.field(), flat.rows(), d2, |r, i| flat.get(r, i * n + j).clone()))
            .collect();
        Self::new(n, flat.field(), flat.rows(), d2, maps)
    }

    pub fn direct_sum(&self, other: &KroneckerRep) -> KroneckerRep {
        assert_eq!((self.n, self.field), (other.n, other.field), "direct sum of incompatible reps");
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.block_diag(b)).collect();
        KroneckerRep { n: self.n, field: self.field, d1: self.d1 + other.d1, d2: self.d2 + other.d2, maps }
    }

    pub fn power(&self, k: usize) -> KroneckerRep {
        (0..k).fold(KroneckerRep::zero(self.n, self.field), |acc, _| acc.direct_sum(self))
    }

    /// Twist along `g ∈ GL(W)`: `c^g = c ∘ (id ⊗ g)`, i.e. `c^g_j = Σ_l g_{lj} c_l`.
    /// The dual representation `(V*, U*)` with arrows `c_j^T`.
    pub fn dual(&self) -> KroneckerRep {
        let maps = self.maps.iter().map(Matrix::transpose).collect();
        KroneckerRep { n: self.n, field: self.field, d1: self.d2, d2: self.d1, maps }
    }

    pub fn twist(&self, g: &Matrix) -> KroneckerRep {
        assert_eq!((g.rows(), g.cols()), (self.n, self.n), "twist by a non n x n matrix");
        let maps = (0..self.n)
            .map(|j| {
                (0..self.n).fold(Matrix::zeros(self.field, self.d1, self.d2), |acc, l| {
                    acc.add(&self.maps[l].scale(g.get(l, j)))
                })
            })
            .collect();
        KroneckerRep { maps, ..self.clone() }
    }

    /// Tensor with a multiplicity space of dimension `k`.
    pub fn tensor_space(&self, k: usize) -> KroneckerRep {
        self.power(k)
    }

    pub fn check_compatible(&self, other: &KroneckerRep) -> Result<()> {
        if self.n != other.n || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "representations over Q_{} / {} and Q_{} / {}",
                self.n, self.field, other.n, other.field
            )));
        }
        Ok(())
    }

    /// Projective cover of the simple at vertex `i`.
    pub fn projective(i: u8, n: usize, field: FieldSpec) -> Result<Self> {
        match i {
            1 => Ok(Self::with_dims(n, field, 1, 0)),
            2 => {
                let maps = (0..n)
                    .map(|j| Matrix::from_fn(field, n, 1, |r, _| if r == j { field.one() } else { field.zero() }))
                    .collect();
                Self::new(n, field, n, 1, maps)
            }
            _ => Err(Error::InvalidArgument(format!("vertex {i} (expected 1 or 2)"))),
        }
    }

    /// Injective envelope of the simple at vertex `i`. `I_1 = (k, W*, ev)`.
    pub fn injective(i: u8, n: usize, field: FieldSpec) -> Result<Self> {
        match i {
            1 => {
                let maps = (0..n)
                    .map(|j| Matrix::from_fn(field, 1, n, |_, c| if c == j { field.one() } else { field.zero() }))
                    .collect();
                Self::new(n, field, 1, n, maps)
            }
            2 => Ok(Self::with_dims(n, field, 0, 1)),
            _ => Err(Error::InvalidArgument(format!("vertex {i} (expected 1 or 2)"))),
        }
    }

    /// `S_1 = P_1`, `S_2 = I_2`.
    pub fn simple(i: u8, n: usize, field: FieldSpec) -> Result<Self> {
        match i {
            1 => Self::projective(1, n, field),
            2 => Self::injective(2, n, field),
            _ => Err(Error::InvalidArgument(format!("vertex {i} (expected 1 or 2)"))),
        }
    }

    /// Random representation with entries in `[-range, range]` (or uniform-ish
    /// residues over a prime field).
    pub fn random<R: Rng + ?Sized>(n: usize, field: FieldSpec, d1: usize, d2: usize, range: i64, rng: &mut R) -> Self {
        let maps = (0..n).map(|_| random_matrix(field, d1, d2, range, rng)).collect();
        KroneckerRep { n, field, d1, d2, maps }
    }
}

/// Bilinear form `π: W -> W*` given by an invertible `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    matrix: Matrix,
    inverse: Matrix,
    symmetry: Symmetry,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    Neither,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::Antisymmetric => "antisymmetric",
            Symmetry::Neither => "neither",
        })
    }
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidForm(format!("{}x{} matrix", matrix.rows(), matrix.cols())));
        }
        let inverse = matrix.inverse().ok_or_else(|| Error::InvalidForm("singular matrix".into()))?;
        let t = matrix.transpose();
        // over characteristic 2 a form can be both; report symmetric
        let symmetry = if t == matrix {
            Symmetry::Symmetric
        } else if t == matrix.neg() {
            Symmetry::Antisymmetric
        } else {
            Symmetry::Neither
        };
        Ok(BilinearForm { matrix, inverse, symmetry })
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        Self::new(Matrix::identity(field, n)).expect("identity is invertible")
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
    pub fn inverse(&self) -> &Matrix {
        &self.inverse
    }
    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }
    pub fn n(&self) -> usize {
        self.matrix.rows()
    }
    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    /// `π*`, represented by the transpose.
    pub fn adjoint(&self) -> BilinearForm {
        Self::new(self.matrix.transpose()).expect("transpose of invertible is invertible")
    }

    /// The automorphism of `W` through which `π* ∘ π^{-1}` acts on
    /// representations (see [`crate::kronecker::lemma_twist`]).
    pub fn twist_matrix(&self) -> Matrix {
        self.matrix.transpose().inverse().expect("transpose of invertible is invertible").mul(&self.matrix)
    }

    pub(crate) fn check_for(&self, n: usize, field: FieldSpec) -> Result<()> {
        if self.n() != n || self.field() != field {
            return Err(Error::InvalidForm(format!(
                "form on a {}-dimensional space over {} used with Q_{n} over {field}",
                self.n(),
                self.field()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn standard_dimension_vectors() {
        assert_eq!(KroneckerRep::projective(1, 6, Q).unwrap().dim(), DimVector::new(1, 0));
        assert_eq!(KroneckerRep::projective(2, 6, Q).unwrap().dim(), DimVector::new(6, 1));
        assert_eq!(KroneckerRep::injective(1, 3, Q).unwrap().dim(), DimVector::new(1, 3));
        assert_eq!(KroneckerRep::injective(2, 3, Q).unwrap().dim(), DimVector::new(0, 1));
        assert_eq!(KroneckerRep::simple(2, 3, Q).unwrap(), KroneckerRep::injective(2, 3, Q).unwrap());
    }

    #[test]
    fn flat_round_trip() {
        let p2 = KroneckerRep::projective(2, 3, Q).unwrap();
        assert_eq!(p2.flat(), Matrix::identity(Q, 3));
        assert_eq!(KroneckerRep::from_flat(3, &p2.flat()).unwrap(), p2);
    }

    #[test]
    fn form_symmetry_flags() {
        let a = Matrix::from_i64(Q, &[&[0, 1], &[-1, 0]]);
        assert_eq!(BilinearForm::new(a).unwrap().symmetry(), Symmetry::Antisymmetric);
        let g = Matrix::from_i64(Q, &[&[1, 1], &[0, 1]]);
        assert_eq!(BilinearForm::new(g).unwrap().symmetry(), Symmetry::Neither);
        assert!(matches!(BilinearForm::new(Matrix::zeros(Q, 2, 2)), Err(Error::InvalidForm(_))));
    }

    #[test]
    fn mismatched_arrow_shapes_rejected() {
        let bad = KroneckerRep::new(2, Q, 1, 1, vec![Matrix::zeros(Q, 1, 1), Matrix::zeros(Q, 2, 1)]);
        assert!(matches!(bad, Err(Error::DimensionMismatch(_))));
    }
}
