//! Worked configurations used by the tests, the acceptance suite and the
//! CLI's `--fixtures` table.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alexander::{CurveConfiguration, SingularPoint};
use crate::belyi::BelyiCover;
use crate::mordell_weil::FiberDescriptor;
use crate::singularity::{PuiseuxCharacteristic, SingularityDescriptor};
use crate::{CyclotomicNumber, CyclotomicProduct};

/// Projective point with integer coordinates.
pub fn point(coords: &[i64; 3]) -> [CyclotomicNumber; 3] {
    coords.map(CyclotomicNumber::from_integer)
}

/// The two-pair germs used throughout: `((3,2),(6,5))` and `((3,2),(1,2))`.
pub fn two_pair_germs() -> Vec<PuiseuxCharacteristic> {
    vec![
        PuiseuxCharacteristic::new(vec![(3, 2), (6, 5)]).expect("valid"),
        PuiseuxCharacteristic::new(vec![(3, 2), (1, 2)]).expect("valid"),
    ]
}

/// `(x^p + y^p)^2 + (y^2 + 1)^p = 0` for odd `p ≥ 3`: degree `2p` with
/// `2p` singular points of type `u^2 = v^p` at
/// `(-ζ_p^k y : y : 1)`, `y = ±i`, all in `ℚ(ζ_{lcm(4,p)})`.
pub fn cyclic_cusp_curve(p: u64) -> CurveConfiguration {
    assert!(p >= 3 && p % 2 == 1, "p must be odd and at least 3");
    let descriptor = SingularityDescriptor::one_pair(2, p).expect("coprime");
    let mut points = Vec::new();
    for sign in [1i64, -1] {
        let y = CyclotomicNumber::root_of_unity(4, sign);
        for k in 0..p as i64 {
            let x = -(CyclotomicNumber::root_of_unity(p, k) * y.clone());
            let loc = [x, y.clone(), CyclotomicNumber::from_integer(1)];
            points.push(SingularPoint::new(loc, descriptor.clone()).expect("nonzero"));
        }
    }
    CurveConfiguration::new(2 * p, points).expect("positive degree")
}

/// The six-cusp sextic `(x^3 + y^3)^2 + (y^2 + 1)^3 = 0`.
pub fn cusp_sextic() -> CurveConfiguration {
    cyclic_cusp_curve(3)
}

/// `count` cusps at pseudo-random rational points of height at most 9 on a
/// curve declared to have the given degree. Deterministic in `seed`.
pub fn general_position_cusps(degree: u64, count: usize, seed: u64) -> CurveConfiguration {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let descriptor = SingularityDescriptor::one_pair(2, 3).expect("coprime");
    let points = (0..count)
        .map(|_| {
            let c = [rng.gen_range(-9..=9), rng.gen_range(-9..=9), rng.gen_range(1..=9)];
            SingularPoint::new(point(&c), descriptor.clone()).expect("z != 0")
        })
        .collect();
    CurveConfiguration::new(degree, points).expect("positive degree")
}

/// Alexander polynomial `Φ_{2p}^3` of the Hirano family with `2k + 1 = p`.
pub fn hirano_alexander(p: u64) -> CyclotomicProduct {
    CyclotomicProduct::from_binomial_exponents([(2 * p, 1), (p, -1), (2, -1), (1, 1)])
        .expect("Δ_{2,p} is a polynomial")
        .pow(3)
}

/// Simple fiber with CM by `ℚ(ζ_d)` and trivial trace, e.g. the Jacobian
/// of `u^p = v^2 + 1` for `d = 2p`.
pub fn cm_fiber(d: u64) -> FiberDescriptor {
    FiberDescriptor {
        cm_conductor: Some(d),
        simple: true,
        trivial_trace: true,
    }
}

/// The genus-2 cover `y^10 = x^4 (x - z) z^5` at the rupture of `(5,2)`.
pub fn belyi_genus_two() -> BelyiCover {
    BelyiCover::new(4, 1, 5, 10).expect("valid")
}
