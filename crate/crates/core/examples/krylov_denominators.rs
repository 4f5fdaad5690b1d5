//! Denominators of Krylov minors against powers of the realisation determinant.

use dfinite::arith::Poly;
use dfinite::cli::random::{random_strictly_proper, random_vector, trial_rng};
use dfinite::linalg::det_denominator;
use dfinite::pseudolin::krylov_matrix;

fn main() -> dfinite::Result<()> {
    let mut rng = trial_rng(42, 0);
    let (map, real) = random_strictly_proper(&mut rng, 2, 3)?;
    let a = random_vector(&mut rng, 2, 2);
    println!("Delta = {}", real.delta());
    for s in [vec![0, 1], vec![0, 2], vec![1, 3]] {
        let k = krylov_matrix(&map, &a, &s)?;
        let s_r = *s.last().unwrap();
        let target: Poly = real.delta().pow(s_r as u32);
        for l in 1..=2 {
            let phi = det_denominator(&k, l);
            println!(
                "s = {s:?}, l = {l}: phi = {phi}, divides Delta^{s_r}: {}",
                phi.divides(&target)
            );
        }
    }
    Ok(())
}
