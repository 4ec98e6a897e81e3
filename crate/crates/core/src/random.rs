//! Seeded generators for standard sets, point sets and sliced instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::basis::ReducedGB;
use crate::connect4gb::{SlicedInstance, Summand};
use crate::field::{Field, FieldElement};
use crate::pointset::{fat_points_ideal_gb, vanishing_ideal_gb, FatPoint, PointSet};
use crate::staircase::StandardSet;

/// Grow a standard set of the given size by adding random corners. In
/// dimension 0 the size is capped at 1.
pub fn random_standard_set<R: Rng + ?Sized>(rng: &mut R, dim: usize, size: usize) -> StandardSet {
    let mut elements = Vec::with_capacity(size);
    let mut current = StandardSet::empty(dim);
    let target = if dim == 0 { size.min(1) } else { size };
    while current.len() < target {
        let corners = current.corners();
        let c = corners
            .choose(rng)
            .expect("a finite standard set has corners")
            .clone();
        elements.push(c);
        current = StandardSet::new(dim, elements.iter().cloned()).expect("corners keep closure");
    }
    current
}

/// `count` distinct points with coordinates in `0..=spread`. A small spread
/// makes points share hyperplanes.
pub fn random_point_set<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    count: usize,
    field: Field,
    spread: i64,
) -> PointSet {
    let capacity = (spread as u128 + 1).saturating_pow(dim as u32);
    assert!(
        count as u128 <= capacity,
        "not enough room for {} distinct points",
        count
    );
    let mut coords: Vec<Vec<i64>> = Vec::with_capacity(count);
    while coords.len() < count {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=spread)).collect();
        if !coords.contains(&p) {
            coords.push(p);
        }
    }
    PointSet::from_integers(dim, field, &coords).expect("distinct points")
}

/// A random ideal in `dim` variables whose standard set has `size`
/// elements: reduced points, fat points, or one fat point at the origin
/// (a monomial ideal).
pub fn random_summand_ideal<R: Rng + ?Sized>(
    rng: &mut R,
    dim: usize,
    size: usize,
    field: Field,
) -> ReducedGB {
    if dim == 0 {
        return ReducedGB::monomial(StandardSet::point(0), field);
    }
    match rng.gen_range(0..3) {
        0 => {
            let a = random_point_set(rng, dim, size, field, 3.max(size as i64));
            vanishing_ideal_gb(&a).expect("valid point set")
        }
        1 => {
            let mut fat = Vec::new();
            let mut left = size;
            let mut used: Vec<Vec<i64>> = Vec::new();
            while left > 0 {
                let s = rng.gen_range(1..=left);
                left -= s;
                let p = loop {
                    let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
                    if !used.contains(&p) {
                        break p;
                    }
                };
                used.push(p.clone());
                fat.push(FatPoint {
                    point: p.iter().map(|&c| field.from_i64(c)).collect(),
                    shape: random_standard_set(rng, dim, s),
                });
            }
            fat_points_ideal_gb(dim, field, &fat).expect("distinct fat points")
        }
        _ => ReducedGB::monomial(random_standard_set(rng, dim, size), field),
    }
}

/// A sliced instance in `N^n` with total size at most `max_total` (at most
/// 11) and distinct values `λ_i ∈ [-5, 5]`.
pub fn random_instance<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_total: usize,
    field: Field,
) -> SlicedInstance {
    assert!(n >= 1 && (1..=11).contains(&max_total));
    let total = rng.gen_range(1..=max_total);
    let mut sizes = Vec::new();
    let mut left = total;
    while left > 0 {
        let s = if n == 1 { 1 } else { rng.gen_range(1..=left) };
        sizes.push(s);
        left -= s;
    }
    let mut lambdas: Vec<i64> = (-5..=5).collect();
    lambdas.shuffle(rng);
    let summands = sizes
        .iter()
        .zip(&lambdas)
        .map(|(&s, &l)| Summand {
            basis: random_summand_ideal(rng, n - 1, s, field),
            lambda: field.from_i64(l),
        })
        .collect();
    SlicedInstance::new(field, summands).expect("distinct lambdas and valid bases")
}

/// A random element; over `Q` a small fraction.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, field: Field) -> FieldElement {
    match field {
        Field::Rational => {
            let n = rng.gen_range(-9..=9);
            let d = rng.gen_range(1..=4);
            field
                .parse_element(&format!("{}/{}", n, d))
                .expect("valid fraction")
        }
        Field::Prime(p) => field.from_u64(rng.gen_range(0..p)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn sizes_and_determinism() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for dim in 1..4 {
            for size in 0..8 {
                assert_eq!(random_standard_set(&mut rng, dim, size).len(), size);
            }
        }
        let a = random_instance(&mut ChaCha8Rng::seed_from_u64(3), 3, 8, Field::Rational);
        let b = random_instance(&mut ChaCha8Rng::seed_from_u64(3), 3, 8, Field::Rational);
        assert_eq!(a, b);
        assert!(a.delta().len() <= 8);
    }

    #[test]
    fn summand_sizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let s = rng.gen_range(1..6);
            let g = random_summand_ideal(&mut rng, 2, s, Field::Prime(101));
            assert_eq!(g.delta().len(), s);
        }
    }
}
