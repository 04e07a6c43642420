use std::collections::{HashMap, HashSet};
use std::hash::Hash;

/// One element reached by [`bfs_closure`], with the step that first reached it.
#[derive(Debug, Clone)]
pub(crate) struct Node<T> {
    pub elem: T,
    /// Index of the node this one was reached from (`None` for the identity).
    pub parent: Option<usize>,
    /// Generator applied on the left of the parent.
    pub generator: usize,
}

/// Breadth-first closure of `gens` under left multiplication.
///
/// Levels are word lengths. Inside a level, elements are ordered by the
/// smallest generator index that reaches them from the previous level, then
/// by `Ord` on the element. Returns `Err(())` once more than `cap` elements
/// have been found.
pub(crate) fn bfs_closure<T, F>(identity: T, gens: &[T], mul: F, cap: usize) -> Result<Vec<Node<T>>, ()>
where
    T: Clone + Eq + Hash + Ord,
    F: Fn(&T, &T) -> T,
{
    let mut nodes = vec![Node { elem: identity.clone(), parent: None, generator: 0 }];
    let mut seen: HashSet<T> = HashSet::from([identity]);
    if cap == 0 {
        return Err(());
    }
    let mut level = 0..1;
    while !level.is_empty() {
        let mut fresh: HashMap<T, (usize, usize)> = HashMap::new();
        for (g, gen) in gens.iter().enumerate() {
            for parent in level.clone() {
                let prod = mul(gen, &nodes[parent].elem);
                if !seen.contains(&prod) {
                    fresh.entry(prod).or_insert((g, parent));
                }
            }
        }
        let mut fresh: Vec<(T, (usize, usize))> = fresh.into_iter().collect();
        fresh.sort_by(|a, b| (a.1 .0, &a.0).cmp(&(b.1 .0, &b.0)));
        let start = nodes.len();
        if start + fresh.len() > cap {
            return Err(());
        }
        for (elem, (generator, parent)) in fresh {
            seen.insert(elem.clone());
            nodes.push(Node { elem, parent: Some(parent), generator });
        }
        level = start..nodes.len();
    }
    Ok(nodes)
}

/// Generator indices of the word reaching `nodes[idx]`, first-applied first.
pub(crate) fn word_of<T>(nodes: &[Node<T>], mut idx: usize) -> Vec<usize> {
    let mut word = Vec::new();
    while let Some(parent) = nodes[idx].parent {
        word.push(nodes[idx].generator);
        idx = parent;
    }
    word.reverse();
    word
}
