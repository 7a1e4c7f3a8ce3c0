use crate::automata::Alphabet;
use crate::verify::AgentAlphabet;

/// Greedy agglomerative grouping by shared observations.
///
/// Starting from singletons, repeatedly merges the two clusters whose
/// observation alphabets (unions over members) share the most events; ties
/// go to the pair with the smallest member indices. Stops once
/// `target_groups` clusters remain or, without a target, when no two
/// clusters share an event. Groups are 0-based and sorted.
pub fn group_agents(agents: &[AgentAlphabet], target_groups: Option<usize>) -> Vec<Vec<usize>> {
    let mut clusters: Vec<(Vec<usize>, Alphabet)> = agents
        .iter()
        .enumerate()
        .map(|(i, a)| (vec![i], a.observable.clone()))
        .collect();
    let target = target_groups.unwrap_or(1).max(1);
    while clusters.len() > target {
        let mut best: Option<(usize, usize, usize)> = None;
        for x in 0..clusters.len() {
            for y in x + 1..clusters.len() {
                let shared = clusters[x].1.intersection(&clusters[y].1).len();
                if best.is_none_or(|(_, _, s)| shared > s) {
                    best = Some((x, y, shared));
                }
            }
        }
        let Some((x, y, shared)) = best else { break };
        if shared == 0 && target_groups.is_none() {
            break;
        }
        let (members, alpha) = clusters.remove(y);
        clusters[x].0.extend(members);
        clusters[x].0.sort_unstable();
        clusters[x].1 = clusters[x].1.union(&alpha);
        clusters.sort_by_key(|c| c.0[0]);
    }
    clusters.into_iter().map(|(m, _)| m).collect()
}
