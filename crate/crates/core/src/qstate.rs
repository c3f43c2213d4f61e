// Copyright 2026 the coolsim developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Statevector representation and the primitive operations the protocol is
//! built from: Pauli-string application, projective z measurement, bath
//! reset, and stochastic noise jumps.
//!
//! Conventions used throughout the crate:
//!
//! - Basis index `s` stores qubit `q` in bit `q`: `(s >> q) & 1`.
//! - Bit 0 is the +1 eigenstate of sigma^z (`|0>`), bit 1 the -1 eigenstate.
//! - The bath Zeeman term enters with a positive field, so the bath ground
//!   state is the -1 eigenstate (bit 1) and a measured +1 outcome counts as
//!   an excitation.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

/// Norm tolerance enforced after every public state-changing operation.
pub const NORM_TOL: f64 = 1e-10;

/// A single-qubit Pauli operator (identity factors are implicit).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn name(&self) -> &'static str {
        match self {
            Pauli::X => "X",
            Pauli::Y => "Y",
            Pauli::Z => "Z",
        }
    }
}

impl std::fmt::Display for Pauli {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A weighted tensor product of Pauli operators.
///
/// Only non-identity factors are stored; an empty factor list is the identity
/// scaled by `coefficient`. Coefficients are real because every Hamiltonian
/// term in the protocol is Hermitian.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PauliString {
    /// Non-identity factors as (qubit index, Pauli), sorted by qubit index.
    factors: Vec<(usize, Pauli)>,
    /// Real weight of the term.
    pub coefficient: f64,
}

impl PauliString {
    /// Build a Pauli string from (qubit, Pauli) pairs.
    ///
    /// Duplicate qubit indices are rejected: products of Paulis on the same
    /// qubit should be simplified by the caller, not encoded here.
    pub fn new(coefficient: f64, mut factors: Vec<(usize, Pauli)>) -> Result<Self> {
        if !coefficient.is_finite() {
            return Err(Error::config("Pauli string coefficient must be finite"));
        }
        factors.sort_by_key(|(q, _)| *q);
        if factors.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::config("Pauli string has repeated qubit index"));
        }
        Ok(PauliString {
            factors,
            coefficient,
        })
    }

    pub fn identity(coefficient: f64) -> Self {
        PauliString {
            factors: Vec::new(),
            coefficient,
        }
    }

    pub fn x(coefficient: f64, qubit: usize) -> Self {
        PauliString {
            factors: vec![(qubit, Pauli::X)],
            coefficient,
        }
    }

    pub fn y(coefficient: f64, qubit: usize) -> Self {
        PauliString {
            factors: vec![(qubit, Pauli::Y)],
            coefficient,
        }
    }

    pub fn z(coefficient: f64, qubit: usize) -> Self {
        PauliString {
            factors: vec![(qubit, Pauli::Z)],
            coefficient,
        }
    }

    pub fn zz(coefficient: f64, a: usize, b: usize) -> Self {
        PauliString::new(coefficient, vec![(a, Pauli::Z), (b, Pauli::Z)])
            .expect("distinct qubit pair")
    }

    pub fn xx(coefficient: f64, a: usize, b: usize) -> Self {
        PauliString::new(coefficient, vec![(a, Pauli::X), (b, Pauli::X)])
            .expect("distinct qubit pair")
    }

    pub fn factors(&self) -> &[(usize, Pauli)] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of qubits the string acts on non-trivially.
    pub fn weight(&self) -> usize {
        self.factors.len()
    }

    pub fn max_qubit(&self) -> Option<usize> {
        self.factors.last().map(|(q, _)| *q)
    }

    /// True if every factor is Z (diagonal in the computational basis).
    pub fn is_z_string(&self) -> bool {
        self.factors.iter().all(|(_, p)| *p == Pauli::Z)
    }

    /// True if every factor is X.
    pub fn is_x_string(&self) -> bool {
        self.factors.iter().all(|(_, p)| *p == Pauli::X)
    }

    /// Bit masks describing the action on a basis state: `(flip, sign, i_pow)`
    /// where `P|s> = coefficient * i^i_pow * (-1)^popcount(s & sign) * |s ^ flip>`.
    pub(crate) fn masks(&self) -> PauliMasks {
        let mut flip = 0usize;
        let mut sign = 0usize;
        let mut n_y = 0u32;
        for &(q, p) in &self.factors {
            match p {
                Pauli::X => flip |= 1 << q,
                Pauli::Y => {
                    flip |= 1 << q;
                    sign |= 1 << q;
                    n_y += 1;
                }
                Pauli::Z => sign |= 1 << q,
            }
        }
        PauliMasks {
            flip,
            sign,
            phase: Complex64::i().powu(n_y) * self.coefficient,
        }
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:+.4}", self.coefficient)?;
        if self.factors.is_empty() {
            write!(f, " I")?;
        }
        for (q, p) in &self.factors {
            write!(f, " {}[{}]", p, q)?;
        }
        Ok(())
    }
}

/// Precomputed basis-state action of a Pauli string.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PauliMasks {
    pub flip: usize,
    pub sign: usize,
    /// coefficient * i^(number of Y factors)
    pub phase: Complex64,
}

impl PauliMasks {
    #[inline]
    pub fn amp_phase(&self, s: usize) -> Complex64 {
        if (s & self.sign).count_ones() & 1 == 1 {
            -self.phase
        } else {
            self.phase
        }
    }
}

/// Which qubits stochastic noise acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseTargets {
    SystemOnly,
    SystemAndBath,
}

/// Kind of local noise channel, unraveled as stochastic Pauli jumps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseKind {
    None,
    Depolarizing,
    PauliX,
    PauliY,
    PauliZ,
}

/// Local noise model: independent jump probability `rate * dt` per target
/// qubit per step.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct NoiseModel {
    pub kind: NoiseKind,
    /// Jump probability per qubit per unit time.
    pub rate: f64,
    pub targets: NoiseTargets,
}

impl NoiseModel {
    pub fn none() -> Self {
        NoiseModel {
            kind: NoiseKind::None,
            rate: 0.0,
            targets: NoiseTargets::SystemOnly,
        }
    }

    pub fn validate(&self, dt: f64) -> Result<()> {
        if !self.rate.is_finite() || self.rate < 0.0 {
            return Err(Error::config("noise rate must be finite and >= 0"));
        }
        if self.kind != NoiseKind::None && self.rate * dt >= 1.0 {
            return Err(Error::config(format!(
                "noise rate {} times step {} must stay below 1",
                self.rate, dt
            )));
        }
        Ok(())
    }
}

/// Map from logical qubit roles (system site, paired bath qubit) to tensor
/// positions. Systems occupy positions `0..n_system`, the bath qubit paired
/// with site `n` sits at `n_system + n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct QubitLayout {
    pub n_system: usize,
    pub n_bath: usize,
}

impl QubitLayout {
    pub fn system_only(n_system: usize) -> Self {
        QubitLayout { n_system, n_bath: 0 }
    }

    pub fn with_paired_bath(n_system: usize) -> Self {
        QubitLayout {
            n_system,
            n_bath: n_system,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_system + self.n_bath
    }

    pub fn system_qubit(&self, site: usize) -> usize {
        debug_assert!(site < self.n_system);
        site
    }

    pub fn bath_qubit(&self, site: usize) -> usize {
        debug_assert!(site < self.n_bath);
        self.n_system + site
    }

    pub fn bath_qubits(&self) -> std::ops::Range<usize> {
        self.n_system..self.n_system + self.n_bath
    }
}

/// Normalized complex amplitudes over the full system (x) bath register.
///
/// A `StateVector` is a value owned by exactly one trajectory; operations
/// either consume or mutate their owned state, so independent trajectories
/// can run concurrently without sharing.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    layout: QubitLayout,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state `|s>` for the given layout.
    pub fn basis_state(layout: QubitLayout, s: usize) -> Result<Self> {
        let n = layout.n_qubits();
        check_register_size(n)?;
        let dim = 1usize << n;
        if s >= dim {
            return Err(Error::config(format!(
                "basis index {} out of range for {} qubits",
                s, n
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[s] = Complex64::new(1.0, 0.0);
        Ok(StateVector { layout, amps })
    }

    /// Build from raw amplitudes; the vector is normalized on construction.
    pub fn from_amplitudes(layout: QubitLayout, amps: Vec<Complex64>) -> Result<Self> {
        let n = layout.n_qubits();
        check_register_size(n)?;
        if amps.len() != 1usize << n {
            return Err(Error::config(format!(
                "amplitude vector of length {} does not match {} qubits",
                amps.len(),
                n
            )));
        }
        let mut state = StateVector { layout, amps };
        let norm = state.norm();
        if norm < 1e-14 {
            return Err(Error::config("cannot normalize a zero state vector"));
        }
        state.scale(1.0 / norm);
        Ok(state)
    }

    pub fn layout(&self) -> QubitLayout {
        self.layout
    }

    pub fn n_qubits(&self) -> usize {
        self.layout.n_qubits()
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub(crate) fn scale(&mut self, factor: f64) {
        for a in &mut self.amps {
            *a *= factor;
        }
    }

    fn check_qubit(&self, qubit: usize) -> Result<()> {
        if qubit >= self.n_qubits() {
            return Err(Error::config(format!(
                "qubit index {} out of range for {} qubits",
                qubit,
                self.n_qubits()
            )));
        }
        Ok(())
    }

    /// Apply `coefficient * (tensor product of Pauli factors)` to the state,
    /// returning the transformed vector. The norm scales by `|coefficient|`.
    pub fn apply_pauli_string(&self, term: &PauliString) -> Result<StateVector> {
        if let Some(q) = term.max_qubit() {
            self.check_qubit(q)?;
        }
        let masks = term.masks();
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for (s, &a) in self.amps.iter().enumerate() {
            out[s ^ masks.flip] = masks.amp_phase(s) * a;
        }
        Ok(StateVector {
            layout: self.layout,
            amps: out,
        })
    }

    /// In-place unnormalized Pauli application used by noise jumps (pure
    /// Paulis preserve the norm).
    pub(crate) fn apply_pauli_in_place(&mut self, qubit: usize, pauli: Pauli) {
        let mask = 1usize << qubit;
        match pauli {
            Pauli::X => {
                for s in 0..self.amps.len() {
                    if s & mask == 0 {
                        self.amps.swap(s, s | mask);
                    }
                }
            }
            Pauli::Y => {
                let i = Complex64::i();
                for s in 0..self.amps.len() {
                    if s & mask == 0 {
                        let a0 = self.amps[s];
                        let a1 = self.amps[s | mask];
                        // Y|0> = i|1>, Y|1> = -i|0>
                        self.amps[s] = -i * a1;
                        self.amps[s | mask] = i * a0;
                    }
                }
            }
            Pauli::Z => {
                for s in 0..self.amps.len() {
                    if s & mask != 0 {
                        self.amps[s] = -self.amps[s];
                    }
                }
            }
        }
    }

    /// `<self|other>`, conjugate-linear in `self`.
    pub fn inner_product(&self, other: &StateVector) -> Result<Complex64> {
        if self.n_qubits() != other.n_qubits() {
            return Err(Error::config(format!(
                "inner product size mismatch: {} vs {} qubits",
                self.n_qubits(),
                other.n_qubits()
            )));
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// `<psi| sum_k term_k |psi>` for a Hermitian Pauli sum (real result).
    pub fn expectation(&self, terms: &[PauliString]) -> f64 {
        let mut total = Complex64::new(0.0, 0.0);
        for term in terms {
            let masks = term.masks();
            let mut acc = Complex64::new(0.0, 0.0);
            for (s, &a) in self.amps.iter().enumerate() {
                let target = s ^ masks.flip;
                acc += self.amps[target].conj() * masks.amp_phase(s) * a;
            }
            total += acc;
        }
        total.re
    }

    /// Probability of measuring +1 (bit 0) on `qubit`.
    pub fn prob_plus(&self, qubit: usize) -> Result<f64> {
        self.check_qubit(qubit)?;
        let mask = 1usize << qubit;
        Ok(self
            .amps
            .iter()
            .enumerate()
            .filter(|(s, _)| s & mask == 0)
            .map(|(_, a)| a.norm_sqr())
            .sum())
    }

    /// Projective sigma^z measurement of one qubit.
    ///
    /// The outcome (+1 or -1) is drawn with Born probabilities; the state is
    /// projected onto the outcome subspace and renormalized.
    pub fn measure_qubit_z<R: Rng + ?Sized>(&mut self, qubit: usize, rng: &mut R) -> Result<i8> {
        let p_plus = self.prob_plus(qubit)?;
        let draw: f64 = rng.gen();
        let outcome_plus = draw < p_plus;
        let p_outcome = if outcome_plus { p_plus } else { 1.0 - p_plus };
        if p_outcome < 1e-14 {
            return Err(Error::Internal(format!(
                "drew a measurement outcome of probability {:.3e}",
                p_outcome
            )));
        }
        let mask = 1usize << qubit;
        let keep_bit = if outcome_plus { 0 } else { mask };
        let renorm = 1.0 / p_outcome.sqrt();
        for (s, a) in self.amps.iter_mut().enumerate() {
            if s & mask == keep_bit {
                *a *= renorm;
            } else {
                *a = Complex64::new(0.0, 0.0);
            }
        }
        Ok(if outcome_plus { 1 } else { -1 })
    }

    /// Return a measured bath qubit to the bath ground state (-1 eigenstate).
    ///
    /// If the recorded outcome was the excited (+1) eigenvalue, a bit flip is
    /// applied; otherwise the state is untouched. Expects the state to be
    /// already projected on `qubit`, as after [`Self::measure_qubit_z`].
    pub fn reset_bath_qubit(&mut self, qubit: usize, outcome: i8) -> Result<()> {
        self.check_qubit(qubit)?;
        if outcome > 0 {
            self.apply_pauli_in_place(qubit, Pauli::X);
        }
        Ok(())
    }

    /// One step of the jump unraveling of local noise.
    ///
    /// Independently for every target qubit, a jump fires with probability
    /// `rate * dt`; depolarizing noise draws the applied Pauli uniformly from
    /// {X, Y, Z}, the fixed kinds apply their Pauli. The occurrence decisions
    /// consume `rng_occurrence` and the depolarizing Pauli choice consumes
    /// `rng_choice`, so runs that differ only in the noise kind see identical
    /// jump positions.
    pub fn apply_noise_step<R: Rng + ?Sized>(
        &mut self,
        noise: &NoiseModel,
        dt: f64,
        rng_occurrence: &mut R,
        rng_choice: &mut R,
    ) -> Result<Vec<(usize, Pauli)>> {
        noise.validate(dt)?;
        if noise.kind == NoiseKind::None || noise.rate == 0.0 {
            return Ok(Vec::new());
        }
        let p_jump = noise.rate * dt;
        let targets: Vec<usize> = match noise.targets {
            NoiseTargets::SystemOnly => (0..self.layout.n_system).collect(),
            NoiseTargets::SystemAndBath => (0..self.n_qubits()).collect(),
        };
        let mut jumps = Vec::new();
        for qubit in targets {
            let u: f64 = rng_occurrence.gen();
            if u >= p_jump {
                continue;
            }
            let pauli = match noise.kind {
                NoiseKind::Depolarizing => match rng_choice.gen_range(0..3u8) {
                    0 => Pauli::X,
                    1 => Pauli::Y,
                    _ => Pauli::Z,
                },
                NoiseKind::PauliX => Pauli::X,
                NoiseKind::PauliY => Pauli::Y,
                NoiseKind::PauliZ => Pauli::Z,
                NoiseKind::None => unreachable!(),
            };
            self.apply_pauli_in_place(qubit, pauli);
            jumps.push((qubit, pauli));
        }
        Ok(jumps)
    }

    /// `|<self|other>|^2`.
    pub fn fidelity(&self, other: &StateVector) -> Result<f64> {
        Ok(self.inner_product(other)?.norm_sqr())
    }
}

fn check_register_size(n_qubits: usize) -> Result<()> {
    if n_qubits == 0 {
        return Err(Error::config("state needs at least one qubit"));
    }
    if n_qubits > 28 {
        return Err(Error::capability(format!(
            "{} qubits exceeds the statevector limit of 28",
            n_qubits
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn single(s: usize) -> StateVector {
        StateVector::basis_state(QubitLayout::system_only(1), s).unwrap()
    }

    #[test]
    fn pauli_action_on_basis_states() {
        // X|0> = |1>
        let out = single(0).apply_pauli_string(&PauliString::x(1.0, 0)).unwrap();
        assert_eq!(out.amplitudes()[1], c(1.0, 0.0));
        assert_eq!(out.amplitudes()[0], c(0.0, 0.0));
        // Z|1> = -|1>
        let out = single(1).apply_pauli_string(&PauliString::z(1.0, 0)).unwrap();
        assert_eq!(out.amplitudes()[1], c(-1.0, 0.0));
        // Y|0> = i|1>
        let out = single(0).apply_pauli_string(&PauliString::y(1.0, 0)).unwrap();
        assert_eq!(out.amplitudes()[1], c(0.0, 1.0));
    }

    #[test]
    fn pauli_index_out_of_range_is_config_error() {
        let err = single(0)
            .apply_pauli_string(&PauliString::x(1.0, 3))
            .unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn repeated_qubit_index_rejected() {
        assert!(PauliString::new(1.0, vec![(0, Pauli::X), (0, Pauli::Z)]).is_err());
    }

    #[test]
    fn coefficient_scales_norm() {
        let out = single(0).apply_pauli_string(&PauliString::x(-2.5, 0)).unwrap();
        assert!((out.norm() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn measure_eigenstate_is_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut st = single(0);
            let outcome = st.measure_qubit_z(0, &mut rng).unwrap();
            assert_eq!(outcome, 1);
            assert_eq!(st.amplitudes()[0], c(1.0, 0.0));
        }
    }

    #[test]
    fn measure_equal_superposition() {
        let layout = QubitLayout::system_only(1);
        let mut plus = 0usize;
        let trials = 2000;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..trials {
            let mut st = StateVector::from_amplitudes(
                layout,
                vec![c(1.0, 0.0), c(1.0, 0.0)],
            )
            .unwrap();
            let outcome = st.measure_qubit_z(0, &mut rng).unwrap();
            if outcome == 1 {
                plus += 1;
                assert!((st.amplitudes()[0].norm() - 1.0).abs() < 1e-12);
            } else {
                assert!((st.amplitudes()[1].norm() - 1.0).abs() < 1e-12);
            }
            assert!((st.norm() - 1.0).abs() < NORM_TOL);
        }
        let freq = plus as f64 / trials as f64;
        assert!((freq - 0.5).abs() < 0.05, "freq = {}", freq);
    }

    #[test]
    fn measure_bell_state_collapses_both_qubits() {
        let layout = QubitLayout::system_only(2);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let mut st = StateVector::from_amplitudes(
                layout,
                vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
            )
            .unwrap();
            let outcome = st.measure_qubit_z(0, &mut rng).unwrap();
            let expect = if outcome == 1 { 0 } else { 3 };
            assert!((st.amplitudes()[expect].norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn born_consistency_over_many_draws() {
        // amplitude weights 0.36 / 0.64 on qubit 0
        let layout = QubitLayout::system_only(2);
        let base = StateVector::from_amplitudes(
            layout,
            vec![c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let p = base.prob_plus(0).unwrap();
        let n = 100_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(20260810);
        let mut plus = 0usize;
        for _ in 0..n {
            let mut st = base.clone();
            if st.measure_qubit_z(0, &mut rng).unwrap() == 1 {
                plus += 1;
            }
        }
        let freq = plus as f64 / n as f64;
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        assert!(
            (freq - p).abs() <= 3.0 * sigma,
            "freq {} vs p {} (3 sigma = {})",
            freq,
            p,
            3.0 * sigma
        );
    }

    #[test]
    fn reset_flips_excited_outcome_only() {
        let layout = QubitLayout::with_paired_bath(1);
        // system |0>, bath excited (+1 eigenstate = bit 0)
        let mut st = StateVector::basis_state(layout, 0b00).unwrap();
        st.reset_bath_qubit(1, 1).unwrap();
        assert_eq!(st.amplitudes()[0b10], c(1.0, 0.0));
        // ground outcome: unchanged
        let mut st = StateVector::basis_state(layout, 0b10).unwrap();
        st.reset_bath_qubit(1, -1).unwrap();
        assert_eq!(st.amplitudes()[0b10], c(1.0, 0.0));
    }

    #[test]
    fn reset_preserves_other_tensor_factors() {
        let layout = QubitLayout::with_paired_bath(1);
        // (|0> + i|1>)/sqrt(2) on the system, bath excited
        let mut st = StateVector::from_amplitudes(
            layout,
            vec![c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        st.reset_bath_qubit(1, 1).unwrap();
        assert!((st.amplitudes()[0b10] - c(1.0, 0.0) / 2f64.sqrt()).norm() < 1e-12);
        assert!((st.amplitudes()[0b11] - c(0.0, 1.0) / 2f64.sqrt()).norm() < 1e-12);
        // repeated reset with a ground outcome is the identity
        let before = st.clone();
        st.reset_bath_qubit(1, -1).unwrap();
        assert_eq!(before, st);
    }

    #[test]
    fn noise_none_is_identity() {
        let mut st = single(0);
        let before = st.clone();
        let mut rng1 = ChaCha8Rng::seed_from_u64(1);
        let mut rng2 = ChaCha8Rng::seed_from_u64(2);
        let jumps = st
            .apply_noise_step(&NoiseModel::none(), 0.05, &mut rng1, &mut rng2)
            .unwrap();
        assert!(jumps.is_empty());
        assert_eq!(before, st);
    }

    #[test]
    fn noise_rate_guard() {
        let noise = NoiseModel {
            kind: NoiseKind::PauliX,
            rate: 30.0,
            targets: NoiseTargets::SystemOnly,
        };
        let mut st = single(0);
        let mut rng1 = ChaCha8Rng::seed_from_u64(1);
        let mut rng2 = ChaCha8Rng::seed_from_u64(2);
        let err = st
            .apply_noise_step(&noise, 0.05, &mut rng1, &mut rng2)
            .unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn noise_jump_rate_matches_analytic_mean() {
        // 8 qubits, rate 0.01, dt 0.05 -> 0.004 expected jumps per step
        let layout = QubitLayout::system_only(8);
        let noise = NoiseModel {
            kind: NoiseKind::Depolarizing,
            rate: 0.01,
            targets: NoiseTargets::SystemOnly,
        };
        let mut st = StateVector::basis_state(layout, 0).unwrap();
        let steps = 200_000usize;
        let mut rng1 = ChaCha8Rng::seed_from_u64(99);
        let mut rng2 = ChaCha8Rng::seed_from_u64(100);
        let mut total = 0usize;
        for _ in 0..steps {
            total += st
                .apply_noise_step(&noise, 0.05, &mut rng1, &mut rng2)
                .unwrap()
                .len();
        }
        let mean = total as f64 / steps as f64;
        let expected = 8.0 * 0.01 * 0.05;
        let sigma = (expected / steps as f64).sqrt();
        assert!(
            (mean - expected).abs() <= 3.0 * sigma,
            "mean {} vs expected {}",
            mean,
            expected
        );
        assert!((st.norm() - 1.0).abs() < NORM_TOL);
    }

    #[test]
    fn pauli_x_jump_flips_exactly_one_bit() {
        let layout = QubitLayout::system_only(3);
        let noise = NoiseModel {
            kind: NoiseKind::PauliX,
            rate: 19.0,
            targets: NoiseTargets::SystemOnly,
        };
        // rate*dt = 0.95: jumps on essentially every qubit draw
        let mut rng1 = ChaCha8Rng::seed_from_u64(5);
        let mut rng2 = ChaCha8Rng::seed_from_u64(6);
        let mut st = StateVector::basis_state(layout, 0b000).unwrap();
        let jumps = st
            .apply_noise_step(&noise, 0.05, &mut rng1, &mut rng2)
            .unwrap();
        let mut expect = 0usize;
        for (q, p) in jumps {
            assert_eq!(p, Pauli::X);
            expect ^= 1 << q;
        }
        assert!((st.amplitudes()[expect].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn inner_product_basics() {
        let psi = single(0);
        assert_eq!(psi.inner_product(&psi).unwrap(), c(1.0, 0.0));
        let phi = single(1);
        assert_eq!(psi.inner_product(&phi).unwrap(), c(0.0, 0.0));
        let err = psi
            .inner_product(&StateVector::basis_state(QubitLayout::system_only(2), 0).unwrap())
            .unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn inner_product_conjugate_linear_in_first_argument() {
        let layout = QubitLayout::system_only(1);
        let a = StateVector::from_amplitudes(layout, vec![c(0.6, 0.3), c(0.2, -0.7)]).unwrap();
        let b = StateVector::from_amplitudes(layout, vec![c(-0.2, 0.5), c(0.8, 0.1)]).unwrap();
        let ab = a.inner_product(&b).unwrap();
        let ba = b.inner_product(&a).unwrap();
        assert!((ab - ba.conj()).norm() < 1e-14);
    }

    #[test]
    fn expectation_of_z_matches_bit_convention() {
        let st = single(0);
        assert!((st.expectation(&[PauliString::z(1.0, 0)]) - 1.0).abs() < 1e-14);
        let st = single(1);
        assert!((st.expectation(&[PauliString::z(1.0, 0)]) + 1.0).abs() < 1e-14);
    }
}
