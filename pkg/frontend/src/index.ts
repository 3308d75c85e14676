export { Model, MISSING_EDGE_VALUE, TW_OPEN } from './model.js';
export type { Client, ClientOptions, Depot, SolveOptions, VehicleType } from './model.js';
export { serializeInstance } from './instance.js';
export { solveInstanceFile, solvePath, solverCommand } from './runner.js';
export { summarize } from './result.js';
export type { SolveResult } from './result.js';
export { maxIterations, maxRuntime, noImprovement } from './stop.js';
export type { StopSpec } from './stop.js';
