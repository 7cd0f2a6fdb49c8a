/* tslint:disable */
/* eslint-disable */

/**
 * Slit-time sums over growing windows, divided by `m / (2 pi i hbar)`.
 */
export class Convergence {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly im: Float64Array;
    readonly limit_im: number;
    /**
     * The complete integral, which the series approaches.
     */
    readonly limit_re: number;
    readonly re: Float64Array;
    readonly stationary_phase: number;
    readonly window_fs: Float64Array;
}

/**
 * Real part and envelope of a Gaussian packet at one instant.
 */
export class Packet {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly envelope: Float64Array;
    readonly position_nm: Float64Array;
    readonly re: Float64Array;
}

/**
 * Intuitive and stationary-phase screen patterns, each scaled to a peak of 1.
 */
export class Pattern {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly fringe_nm: number;
    readonly intuitive: Float64Array;
    readonly screen_nm: Float64Array;
    readonly stationary: Float64Array;
}

/**
 * Symmetric path with legs `leg_um`. With `align` the duration is nudged so
 * the stationary phase is an odd multiple of pi.
 */
export function convergence_series(leg_um: number, duration_fs: number, align: boolean, count: number): Convergence;

/**
 * Two point slits `separation_nm` apart, the source in line with the upper
 * one, source and screen `distance_um` from the slits. The electron covers
 * the straight source-screen line at `speed_m_per_s`.
 */
export function near_field_pattern(separation_nm: number, distance_um: number, speed_m_per_s: number, fringes: number, count: number): Pattern;

export function packet_snapshot(speed_m_per_s: number, relative_width: number, time_as: number, min_nm: number, max_nm: number, count: number): Packet;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_convergence_free: (a: number, b: number) => void;
    readonly __wbg_packet_free: (a: number, b: number) => void;
    readonly __wbg_pattern_free: (a: number, b: number) => void;
    readonly convergence_im: (a: number) => [number, number];
    readonly convergence_limit_im: (a: number) => number;
    readonly convergence_limit_re: (a: number) => number;
    readonly convergence_re: (a: number) => [number, number];
    readonly convergence_series: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly convergence_stationary_phase: (a: number) => number;
    readonly convergence_window_fs: (a: number) => [number, number];
    readonly near_field_pattern: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly packet_envelope: (a: number) => [number, number];
    readonly packet_position_nm: (a: number) => [number, number];
    readonly packet_re: (a: number) => [number, number];
    readonly packet_snapshot: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly pattern_fringe_nm: (a: number) => number;
    readonly pattern_intuitive: (a: number) => [number, number];
    readonly pattern_screen_nm: (a: number) => [number, number];
    readonly pattern_stationary: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
