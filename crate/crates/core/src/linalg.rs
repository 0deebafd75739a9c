//! Dense complex linear algebra over small tensor-product spaces.
//!
//! Everything here is deliberately plain: row-major `Vec<C64>` storage, no
//! views, no sparsity. Register 0 of a [`TensorLayout`] is always the most
//! significant digit of a basis index.

use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Largest Hilbert-space dimension any dense simulation may allocate.
pub const MAX_SIM_DIM: usize = 1 << 20;

/// Largest register count for which all `N!` permutations are enumerated.
pub const MAX_PERM_REGISTERS: usize = 8;

/// Tolerance used for the normalized / unitary / Hermitian flags.
pub const FLAG_TOL: f64 = 1e-12;

const JACOBI_TOL: f64 = 1e-12;
const JACOBI_MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amps: Vec<C64>,
}

impl StateVector {
    pub fn new(amps: Vec<C64>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::Precondition("state vector must have dim >= 1".into()));
        }
        if amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Precondition("state vector has non-finite amplitude".into()));
        }
        Ok(Self { amps })
    }

    pub fn from_real(amps: &[f64]) -> Result<Self> {
        Self::new(amps.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Computational basis state `|index⟩` of dimension `dim`.
    pub fn basis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut amps = vec![C64::new(0.0, 0.0); dim];
        amps[index] = C64::new(1.0, 0.0);
        Self { amps }
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn is_normalized(&self) -> bool {
        (self.norm_sqr() - 1.0).abs() <= FLAG_TOL
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm_sqr().sqrt();
        if norm == 0.0 {
            return Err(Error::Precondition("cannot normalize the zero vector".into()));
        }
        Ok(self.scaled(C64::new(1.0 / norm, 0.0)))
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            amps: self.amps.iter().map(|a| a * factor).collect(),
        }
    }

    /// `⟨self|other⟩`, antilinear in `self`.
    pub fn inner(&self, other: &StateVector) -> C64 {
        debug_assert_eq!(self.dim(), other.dim());
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// `|⟨self|other⟩|`.
    pub fn overlap(&self, other: &StateVector) -> f64 {
        self.inner(other).norm()
    }

    /// Entrywise comparison of amplitudes.
    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> bool {
        self.dim() == other.dim()
            && self
                .amps
                .iter()
                .zip(&other.amps)
                .all(|(a, b)| (a - b).norm() <= tol)
    }

    /// Kronecker product; `self` becomes the most significant register.
    pub fn tensor(&self, other: &StateVector) -> Result<Self> {
        let dim = checked_dim(self.dim(), other.dim())?;
        let mut amps = Vec::with_capacity(dim);
        for a in &self.amps {
            amps.extend(other.amps.iter().map(|b| a * b));
        }
        Ok(Self { amps })
    }

    /// `self ⊗ self ⊗ … ⊗ self` with `copies ≥ 1` factors.
    pub fn tensor_power(&self, copies: usize) -> Result<Self> {
        if copies == 0 {
            return Err(Error::param("copies", "tensor power needs at least one factor"));
        }
        let mut out = self.clone();
        for _ in 1..copies {
            out = out.tensor(self)?;
        }
        Ok(out)
    }
}

fn checked_dim(a: usize, b: usize) -> Result<usize> {
    match a.checked_mul(b) {
        Some(d) if d <= MAX_SIM_DIM => Ok(d),
        Some(d) => Err(Error::guard("state dimension", d as u64, MAX_SIM_DIM as u64)),
        None => Err(Error::guard("state dimension", u64::MAX, MAX_SIM_DIM as u64)),
    }
}

/// Square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Operator {
    dim: usize,
    entries: Vec<C64>,
}

impl Operator {
    pub fn new(dim: usize, entries: Vec<C64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Precondition("operator must have dim >= 1".into()));
        }
        if entries.len() != dim * dim {
            return Err(Error::Precondition(format!(
                "operator of dim {dim} needs {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(Self { dim, entries })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![C64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = C64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Precondition("rows must form a square matrix".into()));
        }
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| C64::new(x, 0.0)))
            .collect();
        Self::new(dim, entries)
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, C64::new(v, 0.0));
        }
        m
    }

    /// `|v⟩⟨v|`.
    pub fn projector(v: &StateVector) -> Self {
        let mut m = Self::zeros(v.dim());
        m.add_outer(v, 1.0);
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.entries[row * self.dim + col] = value;
    }

    /// `self += weight · |v⟩⟨v|`.
    pub fn add_outer(&mut self, v: &StateVector, weight: f64) {
        assert_eq!(v.dim(), self.dim);
        let a = v.amplitudes();
        for r in 0..self.dim {
            let ar = a[r] * weight;
            if ar == C64::new(0.0, 0.0) {
                continue;
            }
            let row = &mut self.entries[r * self.dim..(r + 1) * self.dim];
            for (e, ac) in row.iter_mut().zip(a) {
                *e += ar * ac.conj();
            }
        }
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.dim() != self.dim {
            return Err(Error::Layout(format!(
                "operator dim {} applied to vector dim {}",
                self.dim,
                v.dim()
            )));
        }
        let amps = self
            .entries
            .chunks_exact(self.dim)
            .map(|row| row.iter().zip(v.amplitudes()).map(|(m, x)| m * x).sum())
            .collect();
        Ok(StateVector { amps })
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                out.entries[c * n + r] = self.entries[r * n + c].conj();
            }
        }
        out
    }

    pub fn matmul(&self, other: &Operator) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Layout("matmul dimension mismatch".into()));
        }
        let n = self.dim;
        let mut out = Self::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.entries[r * n + k];
                if a == C64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..n {
                    out.entries[r * n + c] += a * other.entries[k * n + c];
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, other: &Operator) -> Result<Self> {
        let n = checked_dim(self.dim, other.dim)?;
        let (a, b) = (self.dim, other.dim);
        let mut out = Self::zeros(n);
        for r1 in 0..a {
            for c1 in 0..a {
                let x = self.entries[r1 * a + c1];
                for r2 in 0..b {
                    for c2 in 0..b {
                        out.entries[(r1 * b + r2) * n + c1 * b + c2] = x * other.entries[r2 * b + c2];
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * factor).collect(),
        }
    }

    /// `a·self + b·other`.
    pub fn linear_combination(&self, a: f64, other: &Operator, b: f64) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::Layout("operator dimension mismatch".into()));
        }
        Ok(Self {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| x * a + y * b)
                .collect(),
        })
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Operator) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        let n = self.dim;
        (0..n).all(|r| (r..n).all(|c| (self.get(r, c) - self.get(c, r).conj()).norm() <= tol))
    }

    /// `U†U = I` entrywise within `tol`.
    pub fn is_unitary(&self, tol: f64) -> bool {
        match self.adjoint().matmul(self) {
            Ok(p) => p.max_abs_diff(&Operator::identity(self.dim)) <= tol,
            Err(_) => false,
        }
    }
}

/// `N` registers of dimension `d` each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorLayout {
    num_registers: usize,
    register_dim: usize,
    total_dim: usize,
}

impl TensorLayout {
    pub fn new(num_registers: usize, register_dim: usize) -> Result<Self> {
        if num_registers == 0 {
            return Err(Error::param("num_registers", "must be >= 1"));
        }
        if register_dim == 0 {
            return Err(Error::param("register_dim", "must be >= 1"));
        }
        let mut total = 1usize;
        for _ in 0..num_registers {
            total = checked_dim(total, register_dim)?;
        }
        Ok(Self {
            num_registers,
            register_dim,
            total_dim: total,
        })
    }

    pub fn num_registers(&self) -> usize {
        self.num_registers
    }

    pub fn register_dim(&self) -> usize {
        self.register_dim
    }

    pub fn total_dim(&self) -> usize {
        self.total_dim
    }

    fn check_vector(&self, v: &StateVector) -> Result<()> {
        if v.dim() != self.total_dim {
            return Err(Error::Layout(format!(
                "vector dim {} does not match {} registers of dim {}",
                v.dim(),
                self.num_registers,
                self.register_dim
            )));
        }
        Ok(())
    }

    /// For every input basis index, the output index after permuting registers.
    fn index_map(&self, perm: &[usize]) -> Vec<usize> {
        let (n, d) = (self.num_registers, self.register_dim);
        let mut digits = vec![0usize; n];
        let mut map = Vec::with_capacity(self.total_dim);
        for i in 0..self.total_dim {
            let mut rest = i;
            for k in (0..n).rev() {
                digits[k] = rest % d;
                rest /= d;
            }
            map.push(perm.iter().fold(0, |acc, &p| acc * d + digits[p]));
        }
        map
    }
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    if perm.len() != n {
        return Err(Error::Layout(format!(
            "permutation of length {} for {n} registers",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Precondition(format!("{perm:?} is not a bijection")));
        }
    }
    Ok(())
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Permutations {
    Permutations {
        next: Some((0..n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (1..succ.len()).rev().find(|&i| succ[i - 1] < succ[i]) {
            let j = (i..succ.len()).rev().find(|&j| succ[j] > succ[i - 1]).unwrap();
            succ.swap(i - 1, j);
            succ[i..].reverse();
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// Moves the content of register `k` to position `perm[k]`'s digit slot:
/// output amplitude at `(i_{perm(0)}, …, i_{perm(N−1)})` equals the input
/// amplitude at `(i_0, …, i_{N−1})`.
pub fn permute_registers(v: &StateVector, layout: &TensorLayout, perm: &[usize]) -> Result<StateVector> {
    layout.check_vector(v)?;
    check_permutation(perm, layout.num_registers)?;
    let map = layout.index_map(perm);
    let mut amps = vec![C64::new(0.0, 0.0); v.dim()];
    for (i, &j) in map.iter().enumerate() {
        amps[j] = v.amps[i];
    }
    Ok(StateVector { amps })
}

/// Precomputed index maps for every permutation of a layout, so the
/// symmetric projector can be applied repeatedly as a sum of gathers.
#[derive(Debug, Clone)]
pub struct SymmetricProjector {
    layout: TensorLayout,
    maps: Vec<Vec<usize>>,
}

impl SymmetricProjector {
    pub fn new(layout: TensorLayout) -> Result<Self> {
        let n = layout.num_registers;
        if n > MAX_PERM_REGISTERS {
            return Err(Error::guard(
                "permuted registers",
                n as u64,
                MAX_PERM_REGISTERS as u64,
            ));
        }
        let maps = permutations(n).map(|p| layout.index_map(&p)).collect();
        Ok(Self { layout, maps })
    }

    pub fn layout(&self) -> &TensorLayout {
        &self.layout
    }

    /// `(1/N!) Σ_σ σ(v)`.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        self.layout.check_vector(v)?;
        let mut amps = vec![C64::new(0.0, 0.0); v.dim()];
        for map in &self.maps {
            for (i, &j) in map.iter().enumerate() {
                amps[j] += v.amps[i];
            }
        }
        let scale = 1.0 / self.maps.len() as f64;
        for a in &mut amps {
            *a *= scale;
        }
        Ok(StateVector { amps })
    }
}

/// Projects `v` onto the permutation-symmetric subspace of `layout`.
pub fn symmetric_projector_apply(v: &StateVector, layout: &TensorLayout) -> Result<StateVector> {
    SymmetricProjector::new(*layout)?.apply(v)
}

/// Spectral decomposition `M = V diag(values) V†` of a Hermitian matrix.
/// Eigenvalues ascend; column `i` of `vectors` belongs to `values[i]`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: Operator,
}

impl HermitianEigen {
    pub fn reconstruct(&self) -> Operator {
        let n = self.values.len();
        let mut out = Operator::zeros(n);
        for (k, &lambda) in self.values.iter().enumerate() {
            for r in 0..n {
                let vr = self.vectors.get(r, k) * lambda;
                for c in 0..n {
                    let e = out.get(r, c) + vr * self.vectors.get(c, k).conj();
                    out.set(r, c, e);
                }
            }
        }
        out
    }
}

/// Cyclic complex Jacobi rotations until the off-diagonal Frobenius mass
/// drops below `1e-12 · max(1, ‖M‖_F)`.
pub fn hermitian_eigen(m: &Operator) -> Result<HermitianEigen> {
    if !m.is_hermitian(1e-10) {
        return Err(Error::Precondition("matrix is not Hermitian".into()));
    }
    let n = m.dim;
    let mut a = m.clone();
    // Symmetrize so the rotations start from an exactly Hermitian matrix.
    for r in 0..n {
        a.set(r, r, C64::new(a.get(r, r).re, 0.0));
        for c in r + 1..n {
            let avg = (a.get(r, c) + a.get(c, r).conj()) * 0.5;
            a.set(r, c, avg);
            a.set(c, r, avg.conj());
        }
    }
    let mut v = Operator::identity(n);
    let threshold = JACOBI_TOL * m.frobenius_norm().max(1.0);

    let off_diag = |a: &Operator| -> f64 {
        let mut s = 0.0;
        for r in 0..n {
            for c in 0..n {
                if r != c {
                    s += a.get(r, c).norm_sqr();
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off_diag(&a) >= threshold {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                jacobi_rotate(&mut a, &mut v, p, q);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).re.total_cmp(&a.get(j, j).re));
    let values = order.iter().map(|&i| a.get(i, i).re).collect();
    let mut vectors = Operator::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, new_col, v.get(r, old_col));
        }
    }
    Ok(HermitianEigen { values, vectors })
}

/// One rotation zeroing `a[p][q]`: a phase on column `q` makes the pivot
/// real, then a real Givens rotation diagonalizes the 2x2 block.
fn jacobi_rotate(a: &mut Operator, v: &mut Operator, p: usize, q: usize) {
    let n = a.dim;
    let apq = a.get(p, q);
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = apq / g;
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;
    let theta = (aqq - app) / (2.0 * g);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // U restricted to (p, q): [[c, s], [-s·e^{-iφ}, c·e^{-iφ}]].
    let u_pp = C64::new(c, 0.0);
    let u_pq = C64::new(s, 0.0);
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp * u_pp + akq * u_qp);
        a.set(k, q, akp * u_pq + akq * u_qq);
        let vkp = v.get(k, p);
        let vkq = v.get(k, q);
        v.set(k, p, vkp * u_pp + vkq * u_qp);
        v.set(k, q, vkp * u_pq + vkq * u_qq);
    }
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, u_pp.conj() * apk + u_qp.conj() * aqk);
        a.set(q, k, u_pq.conj() * apk + u_qq.conj() * aqk);
    }
    a.set(p, q, C64::new(0.0, 0.0));
    a.set(q, p, C64::new(0.0, 0.0));
    a.set(p, p, C64::new(a.get(p, p).re, 0.0));
    a.set(q, q, C64::new(a.get(q, q).re, 0.0));
}

pub fn hermitian_eigenvalues(m: &Operator) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(m)?.values)
}

/// `‖M‖₁ = Σ |λᵢ|` for Hermitian `M`.
pub fn trace_norm(m: &Operator) -> Result<f64> {
    Ok(hermitian_eigenvalues(m)?.iter().map(|x| x.abs()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn real(v: &[f64]) -> StateVector {
        StateVector::from_real(v).unwrap()
    }

    #[test]
    fn tensor_product_basis_examples() {
        let zero = real(&[1.0, 0.0]);
        let one = real(&[0.0, 1.0]);
        assert_eq!(zero.tensor(&one).unwrap(), real(&[0.0, 1.0, 0.0, 0.0]));
        assert_eq!(zero.tensor(&zero).unwrap(), real(&[1.0, 0.0, 0.0, 0.0]));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = real(&[h, h]);
        assert!(plus.tensor(&zero).unwrap().approx_eq(&real(&[h, 0.0, h, 0.0]), 1e-15));
    }

    #[test]
    fn tensor_product_guard() {
        let big = StateVector::basis(1 << 11, 0);
        assert!(matches!(big.tensor(&big), Err(Error::SimulationSize { .. })));
        assert!(TensorLayout::new(21, 2).is_err());
        assert!(TensorLayout::new(20, 2).is_ok());
    }

    #[test]
    fn permutations_are_lexicographic() {
        let all: Vec<_> = permutations(3).collect();
        assert_eq!(
            all,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(permutations(5).count(), 120);
        assert_eq!(permutations(1).count(), 1);
    }

    #[test]
    fn swap_moves_basis_state() {
        let layout = TensorLayout::new(2, 2).unwrap();
        let ket01 = StateVector::basis(4, 1);
        let out = permute_registers(&ket01, &layout, &[1, 0]).unwrap();
        assert_eq!(out, StateVector::basis(4, 2));
        let id = permute_registers(&ket01, &layout, &[0, 1]).unwrap();
        assert_eq!(id, ket01);
    }

    #[test]
    fn cyclic_permutation_follows_index_convention() {
        // d=3, N=3: input |0 1 2⟩, perm = [2, 0, 1] → output digits (i2, i0, i1) = (2, 0, 1).
        let layout = TensorLayout::new(3, 3).unwrap();
        let input = StateVector::basis(27, 3 + 2);
        let out = permute_registers(&input, &layout, &[2, 0, 1]).unwrap();
        assert_eq!(out, StateVector::basis(27, 2 * 9 + 1));
    }

    #[test]
    fn permute_rejects_bad_input() {
        let layout = TensorLayout::new(2, 2).unwrap();
        let v = StateVector::basis(4, 0);
        assert!(matches!(permute_registers(&v, &layout, &[0, 0]), Err(Error::Precondition(_))));
        assert!(matches!(permute_registers(&v, &layout, &[0]), Err(Error::Layout(_))));
        let wrong = StateVector::basis(8, 0);
        assert!(matches!(permute_registers(&wrong, &layout, &[1, 0]), Err(Error::Layout(_))));
    }

    #[test]
    fn symmetric_projector_examples() {
        let layout = TensorLayout::new(2, 2).unwrap();
        let ket00 = StateVector::basis(4, 0);
        assert_eq!(symmetric_projector_apply(&ket00, &layout).unwrap(), ket00);

        let ket01 = StateVector::basis(4, 1);
        let sym = symmetric_projector_apply(&ket01, &layout).unwrap();
        assert!(sym.approx_eq(&real(&[0.0, 0.5, 0.5, 0.0]), 1e-15));
        assert!((sym.norm_sqr() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn symmetric_projector_guard() {
        let layout = TensorLayout::new(9, 2).unwrap();
        let v = StateVector::basis(512, 0);
        assert!(matches!(
            symmetric_projector_apply(&v, &layout),
            Err(Error::SimulationSize { limit: 8, .. })
        ));
    }

    #[test]
    fn eigenvalues_of_simple_matrices() {
        let vals = hermitian_eigenvalues(&Operator::diagonal(&[3.0, 1.0, 2.0])).unwrap();
        assert_eq!(vals, vec![1.0, 2.0, 3.0]);

        let x = Operator::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let vals = hermitian_eigenvalues(&x).unwrap();
        assert!((vals[0] + 1.0).abs() < 1e-14 && (vals[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn bloch_projector_has_spectrum_zero_one() {
        // (I + n·σ)/2 with n = (1, 2, 2)/3.
        let (nx, ny, nz) = (1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0);
        let m = Operator::new(
            2,
            vec![
                c((1.0 + nz) / 2.0, 0.0),
                c(nx / 2.0, -ny / 2.0),
                c(nx / 2.0, ny / 2.0),
                c((1.0 - nz) / 2.0, 0.0),
            ],
        )
        .unwrap();
        let eig = hermitian_eigen(&m).unwrap();
        assert!(eig.values[0].abs() < 1e-14);
        assert!((eig.values[1] - 1.0).abs() < 1e-14);
        assert!(eig.reconstruct().max_abs_diff(&m) < 1e-12);
        // Oracle: a rank-1 projector squares to itself.
        assert!(m.matmul(&m).unwrap().max_abs_diff(&m) < 1e-15);
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let m = Operator::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eigenvalues(&m), Err(Error::Precondition(_))));
        assert!(trace_norm(&m).is_err());
    }

    #[test]
    fn trace_norm_examples() {
        assert_eq!(trace_norm(&Operator::zeros(3)).unwrap(), 0.0);

        let rho = Operator::projector(&real(&[0.6, 0.8]));
        let diff = rho.linear_combination(1.0, &rho, -1.0).unwrap();
        assert!(trace_norm(&diff).unwrap().abs() < 1e-15);

        let m = Operator::diagonal(&[0.5, -0.5]);
        assert!((trace_norm(&m).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn complex_hermitian_eigen_reconstructs() {
        let m = Operator::new(
            3,
            vec![
                c(2.0, 0.0),
                c(0.5, 0.7),
                c(-0.3, 0.2),
                c(0.5, -0.7),
                c(-1.0, 0.0),
                c(0.0, 1.1),
                c(-0.3, -0.2),
                c(0.0, -1.1),
                c(0.25, 0.0),
            ],
        )
        .unwrap();
        let eig = hermitian_eigen(&m).unwrap();
        let sum: f64 = eig.values.iter().sum();
        assert!((sum - m.trace().re).abs() < 1e-12);
        assert!(eig.reconstruct().max_abs_diff(&m) < 1e-12);
        assert!(eig.vectors.is_unitary(1e-12));
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn unitary_and_hermitian_flags() {
        let r = Operator::from_real_rows(&[&[0.0, -1.0], &[1.0, 0.0]]).unwrap();
        assert!(r.is_unitary(FLAG_TOL));
        assert!(!r.is_hermitian(FLAG_TOL));
        let not_u = Operator::diagonal(&[1.0, 2.0]);
        assert!(!not_u.is_unitary(FLAG_TOL));
        assert!(not_u.is_hermitian(FLAG_TOL));
    }

    #[test]
    fn kron_matches_tensor_on_vectors() {
        let a = Operator::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let b = Operator::diagonal(&[1.0, -1.0]);
        let u = real(&[0.6, 0.8]);
        let w = real(&[0.8, -0.6]);
        let lhs = a.kron(&b).unwrap().apply(&u.tensor(&w).unwrap()).unwrap();
        let rhs = a.apply(&u).unwrap().tensor(&b.apply(&w).unwrap()).unwrap();
        assert!(lhs.approx_eq(&rhs, 1e-15));
    }
}
