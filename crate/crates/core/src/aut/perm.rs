//! Permutations on `0..degree` as explicit image tables.

/// A permutation of `0..degree()`. `apply(v)` is the image of `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    image: Vec<usize>,
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Perm{:?}", self.image)
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            image: (0..degree).collect(),
        }
    }

    /// Builds a permutation from an image table, or `None` if the table is
    /// not a bijection.
    pub fn from_images(image: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { image })
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Left-to-right composition: `a.then(b)` applies `a` first, then `b`.
    pub fn then(&self, after: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), after.degree());
        Perm {
            image: self.image.iter().map(|&v| after.image[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Perm { image }
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    /// True when every image equals the corresponding image of `other` on
    /// the listed points.
    pub fn fixes_all(&self, points: &[usize]) -> bool {
        points.iter().all(|&p| self.image[p] == p)
    }
}
