//! The closed surface obtained from a convex 2N-gon by identifying opposite
//! sides and all corner vertices, together with its rank-N homology lattice.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Surface glued from a 2N-gon. Even N gives a smooth genus N/2 surface,
/// odd N a pinched genus (N-1)/2 surface; either way the Euler
/// characteristic is 2 - N.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonSurface {
    pub side_pairs: usize,
    pub genus: usize,
    pub smooth: bool,
    pub euler_char: i64,
}

pub fn make_surface(side_pairs: usize) -> Result<PolygonSurface> {
    if side_pairs < 2 {
        return Err(Error::UnsupportedSurface(side_pairs));
    }
    let smooth = side_pairs.is_multiple_of(2);
    let genus = if smooth { side_pairs / 2 } else { (side_pairs - 1) / 2 };
    Ok(PolygonSurface {
        side_pairs,
        genus,
        smooth,
        euler_char: 2 - side_pairs as i64,
    })
}

impl PolygonSurface {
    /// Rank of the crossing-vector lattice carrying homology classes.
    pub fn h1_rank(&self) -> usize {
        self.side_pairs
    }
}

/// Element of the free abelian group on the N side pairs: the signed
/// crossing counts of a curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomologyClass(pub Vec<i64>);

impl HomologyClass {
    pub fn zero(rank: usize) -> Self {
        HomologyClass(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn rank_len(&self) -> usize {
        self.0.len()
    }

    pub fn add_assign(&mut self, other: &[i64]) {
        debug_assert_eq!(self.0.len(), other.len());
        for (a, b) in self.0.iter_mut().zip(other) {
            *a += b;
        }
    }
}

impl Add for &HomologyClass {
    type Output = HomologyClass;
    fn add(self, rhs: &HomologyClass) -> HomologyClass {
        HomologyClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &HomologyClass {
    type Output = HomologyClass;
    fn sub(self, rhs: &HomologyClass) -> HomologyClass {
        HomologyClass(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &HomologyClass {
    type Output = HomologyClass;
    fn neg(self) -> HomologyClass {
        HomologyClass(self.0.iter().map(|a| -a).collect())
    }
}

impl std::fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus() {
        let s = make_surface(2).unwrap();
        assert_eq!((s.side_pairs, s.genus, s.smooth, s.euler_char), (2, 1, true, 0));
        assert_eq!(s.h1_rank(), 2);
    }

    #[test]
    fn pinched_genus_one() {
        let s = make_surface(3).unwrap();
        assert_eq!((s.side_pairs, s.genus, s.smooth, s.euler_char), (3, 1, false, -1));
        assert_eq!(s.h1_rank(), 3);
    }

    #[test]
    fn smooth_genus_two() {
        let s = make_surface(4).unwrap();
        assert_eq!((s.side_pairs, s.genus, s.smooth, s.euler_char), (4, 2, true, -2));
        assert_eq!(s.h1_rank(), 4);
    }

    #[test]
    fn small_n_rejected() {
        assert!(matches!(make_surface(1), Err(Error::UnsupportedSurface(1))));
        assert!(matches!(make_surface(0), Err(Error::UnsupportedSurface(0))));
    }

    #[test]
    fn euler_formula_holds() {
        for n in 2..40 {
            assert_eq!(make_surface(n).unwrap().euler_char, 2 - n as i64);
            assert_eq!(make_surface(n).unwrap().h1_rank(), n);
        }
    }
}
