//! Output automata and empirical m-kernels.
//!
//! Two hand-built machines compute the sign sequence `p_m(n, -1)` for even
//! `m` from the base-m digits of `n`, one reading least significant digit
//! first, one most significant first. The kernel routine shears a sequence
//! into the subsequences `(a_{m^i n + j})` and groups them by prefix
//! equality; it reports classes distinguishable at that resolution, which
//! is all a finite computation can claim.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::mseq;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutomataError {
    #[error("base {0} is odd; the sign automata need an even base")]
    OddBase(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DigitOrder {
    LeastSignificantFirst,
    MostSignificantFirst,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfaoState {
    pub output: i8,
    /// Successor per digit `0..base`.
    next: Vec<usize>,
}

/// Deterministic finite automaton with output: feeding the base-m digits of
/// `n` in the machine's digit order lands on a state whose output is the
/// sequence value. `n = 0` is the empty digit string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfao {
    base: u64,
    states: Vec<DfaoState>,
    initial: usize,
    pub digit_order: DigitOrder,
}

impl Dfao {
    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn state(&self, s: usize) -> &DfaoState {
        &self.states[s]
    }

    pub fn run(&self, n: u64) -> i8 {
        let mut digits = mseq::base_digits(self.base, n);
        if self.digit_order == DigitOrder::MostSignificantFirst {
            digits.reverse();
        }
        let mut state = self.initial;
        for d in digits {
            state = self.states[state].next[d as usize];
        }
        self.states[state].output
    }
}

/// Builds a transition row sending even digits to `even` and odd digits to
/// `odd`.
fn parity_row(base: u64, even: usize, odd: usize) -> Vec<usize> {
    (0..base)
        .map(|d| if d % 2 == 0 { even } else { odd })
        .collect()
}

/// The four-state machine reading the least significant digit first:
/// the first digit fixes the sign, any later odd digit kills the value.
pub fn sign_dfao_lsd(m: u64) -> Result<Dfao, AutomataError> {
    if !m.is_multiple_of(2) {
        return Err(AutomataError::OddBase(m));
    }
    // 0: start (1), 1: positive (1), 2: negative (-1), 3: sink (0)
    let states = vec![
        DfaoState {
            output: 1,
            next: parity_row(m, 1, 2),
        },
        DfaoState {
            output: 1,
            next: parity_row(m, 1, 3),
        },
        DfaoState {
            output: -1,
            next: parity_row(m, 2, 3),
        },
        DfaoState {
            output: 0,
            next: vec![3; m as usize],
        },
    ];
    Ok(Dfao {
        base: m,
        states,
        initial: 0,
        digit_order: DigitOrder::LeastSignificantFirst,
    })
}

/// The three-state machine reading the most significant digit first: even
/// digits loop, the first odd digit flips the sign, and anything after an
/// odd digit is zero.
pub fn sign_dfao_msd(m: u64) -> Result<Dfao, AutomataError> {
    if !m.is_multiple_of(2) {
        return Err(AutomataError::OddBase(m));
    }
    // 0: start (1), 1: negative (-1), 2: sink (0)
    let states = vec![
        DfaoState {
            output: 1,
            next: parity_row(m, 0, 1),
        },
        DfaoState {
            output: -1,
            next: vec![2; m as usize],
        },
        DfaoState {
            output: 0,
            next: vec![2; m as usize],
        },
    ];
    Ok(Dfao {
        base: m,
        states,
        initial: 0,
        digit_order: DigitOrder::MostSignificantFirst,
    })
}

/// One prefix-distinguishable kernel class, tagged with the first `(i, j)`
/// whose subsequence produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelClass<T> {
    pub i: u32,
    pub j: u64,
    pub prefix: Vec<T>,
}

/// Shears `values` into the subsequences `n -> values[m^i n + j]` for
/// `i <= depth`, `0 <= j < m^i`, comparing them on their first
/// `prefix_len` terms. Needs `values.len() >= m^depth * prefix_len`.
pub fn kernel_classes<T: Ord + Clone>(
    m: u64,
    depth: u32,
    prefix_len: usize,
    values: &[T],
) -> Vec<KernelClass<T>> {
    let top_step = (m as usize)
        .checked_pow(depth)
        .expect("m^depth overflows usize");
    assert!(
        values.len() >= top_step * prefix_len,
        "need {} values, got {}",
        top_step * prefix_len,
        values.len()
    );
    let mut classes: BTreeMap<Vec<T>, (u32, u64)> = BTreeMap::new();
    for i in 0..=depth {
        let step = (m as usize).pow(i);
        for j in 0..step {
            let prefix: Vec<T> = (0..prefix_len)
                .map(|n| values[step * n + j].clone())
                .collect();
            classes.entry(prefix).or_insert((i, j as u64));
        }
    }
    let mut out: Vec<KernelClass<T>> = classes
        .into_iter()
        .map(|(prefix, (i, j))| KernelClass { i, j, prefix })
        .collect();
    out.sort_by_key(|c| (c.i, c.j));
    out
}
