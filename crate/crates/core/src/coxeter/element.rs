use std::fmt;

/// A permutation of `0..n` in one-line form: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    images: Box<[u8]>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize + 1, "at most 256 symbols");
        GroupElement {
            images: (0..n).map(|i| i as u8).collect(),
        }
    }

    /// Builds an element from its one-line images, or `None` if they are not a bijection.
    pub fn from_images(images: &[usize]) -> Option<Self> {
        let n = images.len();
        if n > u8::MAX as usize + 1 {
            return None;
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(GroupElement {
            images: images.iter().map(|&x| x as u8).collect(),
        })
    }

    /// Product of disjoint transpositions on `0..n`.
    pub fn from_transpositions(n: usize, swaps: &[(usize, usize)]) -> Self {
        let mut e = Self::identity(n);
        for &(a, b) in swaps {
            e.images.swap(a, b);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&x| x as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        debug_assert_eq!(self.degree(), other.degree());
        GroupElement {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u8; self.degree()].into_boxed_slice();
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        GroupElement { images: inv }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u32 {
        self.cycles()
            .iter()
            .map(|c| c.len() as u32)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.images[..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(max: usize) -> impl Strategy<Value = GroupElement> {
        (1..=max)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| GroupElement::from_images(&v).unwrap())
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(GroupElement::from_images(&[0, 0]).is_none());
        assert!(GroupElement::from_images(&[0, 2]).is_none());
        assert!(GroupElement::from_images(&[1, 0]).is_some());
    }

    #[test]
    fn order_of_three_cycle_times_transposition() {
        let e = GroupElement::from_images(&[1, 2, 0, 4, 3]).unwrap();
        assert_eq!(e.order(), 6);
        assert_eq!(GroupElement::identity(4).order(), 1);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = GroupElement::from_transpositions(3, &[(0, 1)]);
        let b = GroupElement::from_transpositions(3, &[(1, 2)]);
        // (a∘b)(2) = a(1) = 0
        assert_eq!(a.compose(&b).apply(2), 0);
    }

    proptest! {
        #[test]
        fn inverse_cancels(p in arb_perm(9)) {
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn order_annihilates(p in arb_perm(8)) {
            let mut acc = GroupElement::identity(p.degree());
            for _ in 0..p.order() {
                acc = acc.compose(&p);
            }
            prop_assert!(acc.is_identity());
        }
    }
}
