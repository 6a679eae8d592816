use std::fmt;

/// A permutation of the tetrahedron vertex labels `{0,1,2,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(pub [u8; 4]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Option<Perm> {
        let mut seen = [false; 4];
        for &x in &images {
            if x > 3 || seen[x as usize] {
                return None;
            }
            seen[x as usize] = true;
        }
        Some(Perm(images))
    }

    #[inline]
    pub fn apply(self, v: u8) -> u8 {
        self.0[v as usize]
    }

    pub fn inverse(self) -> Perm {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[self.0[i] as usize] = i as u8;
        }
        Perm(out)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm) -> Perm {
        let mut out = [0u8; 4];
        for i in 0..4 {
            out[i] = self.0[other.0[i] as usize];
        }
        Perm(out)
    }

    pub fn is_even(self) -> bool {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    }

    /// All 24 permutations in lexicographic order.
    pub fn all() -> Vec<Perm> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        if let Some(p) = Perm::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
