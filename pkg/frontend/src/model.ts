import { serializeInstance } from './instance.js';
import { solveInstanceFile } from './runner.js';
import type { SolveResult } from './result.js';
import type { StopSpec } from './stop.js';

/** Sentinel for "no time window"; matches the solver's open upper bound. */
export const TW_OPEN = 2 ** 53;

/** Distance used for edges the model does not specify. */
export const MISSING_EDGE_VALUE = 10_000_000;

export interface Depot {
  readonly kind: 'depot';
  readonly index: 0;
  readonly x: number;
  readonly y: number;
  readonly twEarly: number;
  readonly twLate: number;
}

export interface Client {
  readonly kind: 'client';
  readonly index: number;
  readonly x: number;
  readonly y: number;
  readonly demand: number;
  readonly serviceDuration: number;
  readonly twEarly: number;
  readonly twLate: number;
}

export interface VehicleType {
  readonly numAvailable: number;
  readonly capacity: number;
}

export interface ClientOptions {
  x: number;
  y: number;
  demand?: number;
  serviceDuration?: number;
  twEarly?: number;
  twLate?: number;
}

export interface SolveOptions {
  stop: StopSpec;
  seed?: number;
  /** Parameter profile; the solver detects one from the instance if unset. */
  profile?: 'cvrp' | 'vrptw';
}

/**
 * Accumulates locations, a vehicle type, and edges, then hands the instance
 * to the solver. Mirrors the solver's own model facade: edges not given
 * default to MISSING_EDGE_VALUE, duplicate edges and unknown endpoints are
 * rejected, and solving without a vehicle type fails with "fleet undefined".
 */
export class Model {
  private depot: Depot | null = null;
  private clients: Client[] = [];
  private vehicleType: VehicleType | null = null;
  private edges = new Map<string, number>();
  private known = new Set<Depot | Client>();

  addDepot(x: number, y: number, twEarly = 0, twLate = TW_OPEN): Depot {
    if (this.depot !== null) {
      throw new Error('model already has a depot');
    }
    this.depot = { kind: 'depot', index: 0, x, y, twEarly, twLate };
    this.known.add(this.depot);
    return this.depot;
  }

  addClient(options: ClientOptions): Client {
    const client: Client = {
      kind: 'client',
      index: this.clients.length + 1,
      x: options.x,
      y: options.y,
      demand: options.demand ?? 0,
      serviceDuration: options.serviceDuration ?? 0,
      twEarly: options.twEarly ?? 0,
      twLate: options.twLate ?? TW_OPEN,
    };
    this.clients.push(client);
    this.known.add(client);
    return client;
  }

  addVehicleType(numAvailable: number, capacity: number): VehicleType {
    if (this.vehicleType !== null) {
      throw new Error('model already has a vehicle type');
    }
    this.vehicleType = { numAvailable, capacity };
    return this.vehicleType;
  }

  addEdge(from: Depot | Client, to: Depot | Client, distance: number): void {
    if (!this.known.has(from) || !this.known.has(to)) {
      throw new Error('edge endpoint not part of this model');
    }
    if (distance < 0) {
      throw new Error(`negative edge weight (${from.index}, ${to.index})`);
    }
    const key = `${from.index},${to.index}`;
    if (this.edges.has(key)) {
      throw new Error(`duplicate edge (${from.index}, ${to.index})`);
    }
    this.edges.set(key, distance);
  }

  /** The instance in the solver's file format. */
  toInstanceText(name = 'model'): string {
    if (this.depot === null) {
      throw new Error('depot undefined');
    }
    if (this.vehicleType === null) {
      throw new Error('fleet undefined');
    }
    return serializeInstance(name, this.depot, this.clients, this.vehicleType, this.edges);
  }

  /** Solve through the command-line interface; deterministic per seed. */
  async solve(options: SolveOptions): Promise<SolveResult> {
    return solveInstanceFile(this.toInstanceText(), options);
  }
}
