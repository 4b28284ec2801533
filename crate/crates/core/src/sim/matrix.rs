// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::f64::consts::FRAC_1_SQRT_2;
use std::ops::Mul;

use num_complex::Complex64;

use crate::gate::GateKind;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major square complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = ONE;
        }
        m
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[&[Complex64]]) -> Self {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "matrix must be square");
            data.extend_from_slice(r);
        }
        Matrix { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }

    pub fn set_column(&mut self, j: usize, col: &[Complex64]) {
        for (i, v) in col.iter().enumerate() {
            self[(i, j)] = *v;
        }
    }

    pub fn adjoint(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    /// Kronecker product with `self` as the left (more significant) factor.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let dim = self.dim * rhs.dim;
        let mut m = Matrix::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self[(i, j)];
                if a == ZERO {
                    continue;
                }
                for k in 0..rhs.dim {
                    for l in 0..rhs.dim {
                        m[(i * rhs.dim + k, j * rhs.dim + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> Matrix {
        Matrix { dim: self.dim, data: self.data.iter().map(|v| v * s).collect() }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        Matrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == ZERO {
                    continue;
                }
                for j in 0..n {
                    m.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        m
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pauli_x() -> Matrix {
    Matrix::from_rows(&[&[ZERO, ONE], &[ONE, ZERO]])
}

fn pauli_y() -> Matrix {
    Matrix::from_rows(&[&[ZERO, c(0.0, -1.0)], &[c(0.0, 1.0), ZERO]])
}

fn sqrt_x() -> Matrix {
    Matrix::from_rows(&[&[c(0.5, 0.5), c(0.5, -0.5)], &[c(0.5, -0.5), c(0.5, 0.5)]])
}

fn controlled(u: &Matrix) -> Matrix {
    let mut m = Matrix::identity(4);
    for i in 0..2 {
        for j in 0..2 {
            m[(2 + i, 2 + j)] = u[(i, j)];
        }
    }
    m
}

/// Matrix of a gate kind. Two-qubit matrices take the first operand as the
/// more significant local bit, so CNOT is the textbook
/// `[[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]]`.
///
/// `RZ(θ) = diag(e^{-iθ/2}, e^{iθ/2})`, which makes `RZ(π) = -iZ`.
pub fn gate_matrix(kind: GateKind) -> Matrix {
    let h = FRAC_1_SQRT_2;
    match kind {
        GateKind::I => Matrix::identity(2),
        GateKind::X => pauli_x(),
        GateKind::SqrtX => sqrt_x(),
        GateKind::SqrtXDagger => sqrt_x().adjoint(),
        GateKind::Rz(a) => {
            let t = a.radians() / 2.0;
            Matrix::from_rows(&[&[Complex64::from_polar(1.0, -t), ZERO], &[ZERO, Complex64::from_polar(1.0, t)]])
        }
        GateKind::H => Matrix::from_rows(&[&[c(h, 0.0), c(h, 0.0)], &[c(h, 0.0), c(-h, 0.0)]]),
        GateKind::Cnot => controlled(&pauli_x()),
        GateKind::Swap => {
            let mut m = Matrix::zeros(4);
            m[(0, 0)] = ONE;
            m[(1, 2)] = ONE;
            m[(2, 1)] = ONE;
            m[(3, 3)] = ONE;
            m
        }
        GateKind::Ecr => {
            let ix = pauli_x().kron(&Matrix::identity(2));
            let yx = pauli_y().kron(&pauli_x());
            ix.sub(&yx).scale(c(h, 0.0))
        }
        GateKind::MacroV => controlled(&sqrt_x()),
        GateKind::MacroVDagger => controlled(&sqrt_x().adjoint()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angle::Angle;

    fn is_unitary(m: &Matrix) -> bool {
        (&m.adjoint() * m).sub(&Matrix::identity(m.dim())).frobenius_norm() < 1e-12
    }

    #[test]
    fn every_gate_is_unitary() {
        for k in [
            GateKind::I,
            GateKind::X,
            GateKind::SqrtX,
            GateKind::SqrtXDagger,
            GateKind::Rz(Angle::new(3, 7)),
            GateKind::H,
            GateKind::Cnot,
            GateKind::Swap,
            GateKind::Ecr,
            GateKind::MacroV,
            GateKind::MacroVDagger,
        ] {
            assert!(is_unitary(&gate_matrix(k)), "{k} is not unitary");
        }
    }

    #[test]
    fn sqrt_x_squares_to_x() {
        let sx = gate_matrix(GateKind::SqrtX);
        assert!((&sx * &sx).sub(&pauli_x()).frobenius_norm() < 1e-12);
    }

    #[test]
    fn rz_pi_is_minus_i_z() {
        let rz = gate_matrix(GateKind::Rz(Angle::PI));
        let minus_i_z = Matrix::from_rows(&[&[c(0.0, -1.0), ZERO], &[ZERO, c(0.0, 1.0)]]);
        assert!(rz.sub(&minus_i_z).frobenius_norm() < 1e-12);
    }
}
