/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_convergence_free: (a: number, b: number) => void;
export const __wbg_packet_free: (a: number, b: number) => void;
export const __wbg_pattern_free: (a: number, b: number) => void;
export const convergence_im: (a: number) => [number, number];
export const convergence_limit_im: (a: number) => number;
export const convergence_limit_re: (a: number) => number;
export const convergence_re: (a: number) => [number, number];
export const convergence_series: (a: number, b: number, c: number, d: number) => [number, number, number];
export const convergence_stationary_phase: (a: number) => number;
export const convergence_window_fs: (a: number) => [number, number];
export const near_field_pattern: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const packet_envelope: (a: number) => [number, number];
export const packet_position_nm: (a: number) => [number, number];
export const packet_re: (a: number) => [number, number];
export const packet_snapshot: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const pattern_fringe_nm: (a: number) => number;
export const pattern_intuitive: (a: number) => [number, number];
export const pattern_screen_nm: (a: number) => [number, number];
export const pattern_stationary: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
