use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{BivariateRational, LaurentPoly, TPoly};

impl BivariateRational {
    /// Hadamard product in `T`: the series with coefficients `f_k·g_k`.
    ///
    /// With `D = ∏_{i,j} (1 - X^{a_i + b_j} T)` over the two denominators,
    /// `(f * g)·D` is a polynomial of degree at most `deg D + max(poly deg)`,
    /// so it is read off from a finite prefix of the product series.
    pub fn hadamard_t(&self, other: &Self) -> Self {
        let fa = self.denominator_factors();
        let gb = other.denominator_factors();
        let mut den: BTreeMap<i64, u32> = BTreeMap::new();
        for a in &fa {
            for b in &gb {
                *den.entry(a + b).or_insert(0) += 1;
            }
        }
        let n = fa.len() * gb.len();
        let poly_deg = polynomial_part_degree(self).max(polynomial_part_degree(other));
        let bound = n + poly_deg.map_or(0, |d| d + 1);

        let fs = self.series_prefix(2 * bound + 4);
        let gs = other.series_prefix(2 * bound + 4);
        let prod: Vec<LaurentPoly> = fs.iter().zip(&gs).map(|(x, y)| x * y).collect();

        let d = BivariateRational::raw(TPoly::one(), den.clone()).denominator_poly();
        let head = TPoly::from_coeffs(prod[..=bound].to_vec());
        let num = (&head * &d).truncate(bound);
        let out = BivariateRational::from_parts(num, den);

        let check = out.series_prefix(prod.len() - 1);
        assert_eq!(check, prod, "Hadamard product disagrees with coefficientwise product");
        out
    }
}

/// Degree of the polynomial part `N div D`, if any.
fn polynomial_part_degree(f: &BivariateRational) -> Option<usize> {
    let nd = f.numerator().degree()?;
    nd.checked_sub(f.denominator_degree())
}
