use num_bigint::BigInt;
use num_traits::Zero;

use crate::flags::{fusion, Partition};
use crate::Result;

/// Both sides of the dimension count for a level-`m` flag of `V(xi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionAudit {
    /// `sum_n V^{xi->m}_n(1) dim D(m, n)`.
    pub from_flags: BigInt,
    /// `prod (xi_i + 1)`.
    pub expected: BigInt,
}

impl DimensionAudit {
    pub fn holds(&self) -> bool {
        self.from_flags == self.expected
    }
}

/// `dim D(m, n) = (n0 + 1)(m + 1)^{n1}` with `n = m n1 + n0`.
pub fn demazure_dimension(m: usize, n: usize) -> BigInt {
    let (n1, n0) = (n / m, n % m);
    BigInt::from(n0 + 1) * num_traits::pow(BigInt::from(m + 1), n1)
}

pub fn dimension_audit(xi: &Partition, m: usize) -> Result<DimensionAudit> {
    let size = xi.size();
    let mut from_flags = BigInt::zero();
    for n in (size % 2..=size).step_by(2) {
        let at_one = fusion(xi, n as i64, m)?.eval_at_one();
        from_flags += at_one * demazure_dimension(m, n);
    }
    let expected = xi.parts().iter().map(|&p| BigInt::from(p + 1)).product();
    Ok(DimensionAudit {
        from_flags,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_module_dimension() {
        for s in 0..8 {
            let a = dimension_audit(&Partition::ones(s), s.max(1)).unwrap();
            assert_eq!(a.expected, BigInt::from(1u64 << s));
            assert!(a.holds());
        }
    }

    #[test]
    fn demazure_shape_single_summand() {
        let a = dimension_audit(&Partition::demazure(3, 7), 3).unwrap();
        assert_eq!(a.from_flags, demazure_dimension(3, 7));
        assert!(a.holds());
        assert!(dimension_audit(&Partition::hook(4, 1), 3).is_err());
    }
}
