/** Parsed outcome of one solver run. */
export interface SolveResult {
  cost: number;
  feasible: boolean;
  iterations: number;
  runtimeSeconds: number;
  numRoutes: number;
  /** Client indices per route, 1-based, matching the model's assignment. */
  routes: number[][];
  seed: number;
}

export function summarize(result: SolveResult): string {
  const tag = result.feasible ? 'feasible' : 'INFEASIBLE';
  return (
    `cost ${result.cost} (${tag}), ${result.numRoutes} routes, ` +
    `${result.iterations} iterations in ${result.runtimeSeconds.toFixed(2)}s`
  );
}
