/// A sorted, duplicate-free set of ball vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    indices: Vec<usize>,
}

impl VertexSet {
    pub fn new() -> VertexSet {
        VertexSet::default()
    }

    pub fn from_vec(mut v: Vec<usize>) -> VertexSet {
        v.sort_unstable();
        v.dedup();
        VertexSet { indices: v }
    }

    pub fn from_mask(mask: &[bool]) -> VertexSet {
        VertexSet {
            indices: mask.iter().enumerate().filter(|(_, &m)| m).map(|(i, _)| i).collect(),
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet { indices: vec![v] }
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.indices.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.indices.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.indices
    }

    pub fn max(&self) -> Option<usize> {
        self.indices.last().copied()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &i in &self.indices {
            m[i] = true;
        }
        m
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.indices.clone();
        v.extend_from_slice(&other.indices);
        VertexSet::from_vec(v)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            indices: self.iter().filter(|&v| other.contains(v)).collect(),
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            indices: self.iter().filter(|&v| !other.contains(v)).collect(),
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vec(iter.into_iter().collect())
    }
}
