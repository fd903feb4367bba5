//! Exact arithmetic for M-ary partition polynomials.
//!
//! An *M-ary partition* of `n` is a representation of `n` as a sum of the
//! cumulative products `M_i = m_0 * m_1 * ... * m_i` of a base sequence
//! `M = (m_i)` with `m_0 = 1` and `m_i >= 2`. Collecting these counts by
//! number of parts gives the partition polynomial `p_M(n, t)`, the `n`-th
//! coefficient of the product `prod_j 1 / (1 - t q^{M_j})` expanded in `q`.
//!
//! The crate computes these polynomials exactly (arbitrary-precision integer
//! coefficients) through two independent routes — the two-case recurrence and
//! the truncated generating product — and layers on top of them:
//!
//! - [`intpoly`]: dense exact polynomial arithmetic over `BigInt`, including
//!   exact division, reduction modulo a monic divisor, and a primitive-
//!   remainder-sequence gcd,
//! - [`mseq`]: base sequences (head + repeating cycle), cumulative products,
//!   the unique M-ary digit expansion, digit sums and valuations,
//! - [`engine`]: memoized recurrence evaluation, the generating-product
//!   oracle, per-coefficient sequences, coefficient bounds, stable tail
//!   coefficients and partitions into parts `M_j - 1`,
//! - [`roots`]: rational-root structure, exact evaluation at `t = -1`,
//!   numeric root clouds against the `4^(1/m)` modulus bound, and the
//!   support-normalized polynomials in `q = t^(m-1)`,
//! - [`congruence`]: the digit-product congruence modulo a gcd of geometric
//!   sums, its scalar residue form, and the quantum-integer form,
//! - [`mahler`]: Mahler-type functional equations satisfied by the
//!   fixed-coefficient generating functions,
//! - [`automata`]: the output automata for the sign sequence `p_m(n, -1)`
//!   (even `m`) and empirical m-kernel enumeration.

pub mod automata;
pub mod congruence;
pub mod engine;
pub mod intpoly;
pub mod mahler;
pub mod mseq;
pub mod roots;

pub use engine::{Engine, SeriesTable};
pub use intpoly::IntPoly;
pub use mseq::{MSeq, MaryDigits};
