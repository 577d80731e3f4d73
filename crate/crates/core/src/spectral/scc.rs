use alloc::vec;
use alloc::vec::Vec;

const UNVISITED: usize = usize::MAX;

/// Tarjan's strongly connected components on adjacency lists `succ[v]`.
///
/// Iterative, so deep graphs cannot overflow the stack. Only nodes with
/// `include[v]` set take part. Components are returned sorted internally and
/// ordered by their smallest node.
pub fn strongly_connected_components(succ: &[Vec<usize>], include: &[bool]) -> Vec<Vec<usize>> {
    let n = succ.len();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0usize;
    let mut components: Vec<Vec<usize>> = Vec::new();
    // (node, position in its successor list)
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if !include[root] || index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                if !include[w] {
                    continue;
                }
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("component root is on the stack");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                comp.sort_unstable();
                components.push(comp);
            }
        }
    }
    components.sort_unstable_by_key(|c| c[0]);
    components
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cycles_and_a_tail() {
        // 0 <-> 1, 2 -> 3 -> 2, 4 -> 0
        let succ = vec![vec![1], vec![0], vec![3], vec![2], vec![0]];
        let comps = strongly_connected_components(&succ, &[true; 5]);
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn excluded_nodes_are_skipped() {
        let succ = vec![vec![1], vec![2], vec![0]];
        let comps = strongly_connected_components(&succ, &[true, false, true]);
        assert_eq!(comps, vec![vec![0], vec![2]]);
    }

    #[test]
    fn long_chain_does_not_recurse() {
        let n = 100_000;
        let succ: Vec<Vec<usize>> = (0..n).map(|v| vec![(v + 1) % n]).collect();
        let comps = strongly_connected_components(&succ, &vec![true; n]);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].len(), n);
    }
}
