//! Bethe ansatz: the Bethe equations and a continuation solver for them,
//! the Bethe wave functions `h_p`, and Hall-Littlewood polynomials.

mod hall_littlewood;
mod solver;
mod wave;

pub use hall_littlewood::{hall_littlewood_p, hall_littlewood_r, v_lambda, Partition};
pub use solver::{
    bethe_residual, max_norm, roots_of_unity, solve_bethe, HomotopyOptions, SpectralPoint,
};
pub use wave::{
    bethe_wave, bethe_wave_dominant, bethe_wave_function, eigen_defect, hl_defect, pi_defect,
    verify_hl_identity,
};

/// All permutations of `0..k` with their signs, in lexicographic order.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    use itertools::Itertools;
    (0..k)
        .permutations(k)
        .map(|perm| {
            let inversions = (0..k)
                .tuple_combinations()
                .filter(|&(a, b)| perm[a] > perm[b])
                .count();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            (perm, sign)
        })
        .collect()
}
