/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        assert!(n <= u32::MAX as usize, "union-find capacity exceeded");
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    #[inline]
    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    /// Merges the sets containing `a` and `b`; returns false if they were
    /// already joined.
    #[inline]
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        true
    }

    /// Labels every element by its block, numbering blocks in order of their
    /// smallest member. Returns the labels and the block count.
    pub fn canonical_labels(&mut self) -> (Vec<u32>, usize) {
        let n = self.len();
        let mut root_label = vec![u32::MAX; n];
        let mut labels = vec![0u32; n];
        let mut next = 0u32;
        for i in 0..n {
            let r = self.find(i);
            if root_label[r] == u32::MAX {
                root_label[r] = next;
                next += 1;
            }
            labels[i] = root_label[r];
        }
        (labels, next as usize)
    }

    /// Blocks as sorted member lists, ordered by smallest member.
    pub fn blocks(&mut self) -> Vec<Vec<usize>> {
        let (labels, count) = self.canonical_labels();
        let mut blocks = vec![Vec::new(); count];
        for (i, &l) in labels.iter().enumerate() {
            blocks[l as usize].push(i);
        }
        blocks
    }
}
