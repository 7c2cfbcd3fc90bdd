use crate::error::Result;
use crate::sequences::{positive, PointSequence};

/// Decomposition of a sequence into `delta`-separated classes.
#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    pub classes: Vec<Vec<usize>>,
    pub delta: f64,
}

impl Partition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}

/// Greedy coloring of the conflict graph (edge iff distance `< delta`),
/// vertices in index order, each taking the smallest color unused by its
/// already colored neighbours. Uses at most `1 + max degree` colors.
pub fn partition_into_discrete(seq: &PointSequence, delta: f64) -> Result<Partition> {
    positive("delta", delta)?;
    let n = seq.len();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if seq.distance(i, j) < delta {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }

    let mut color = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut taken = Vec::new();
    for v in 0..n {
        taken.clear();
        taken.resize(classes.len() + 1, false);
        for &u in &adjacency[v] {
            if color[u] != usize::MAX {
                taken[color[u]] = true;
            }
        }
        let c = taken
            .iter()
            .position(|&t| !t)
            .expect("one slot is always free");
        if c == classes.len() {
            classes.push(Vec::new());
        }
        color[v] = c;
        classes[c].push(v);
    }
    Ok(Partition { classes, delta })
}
