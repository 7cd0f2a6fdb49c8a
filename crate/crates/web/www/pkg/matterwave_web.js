/* @ts-self-types="./matterwave_web.d.ts" */

/**
 * Slit-time sums over growing windows, divided by `m / (2 pi i hbar)`.
 */
export class Convergence {
    static __wrap(ptr) {
        const obj = Object.create(Convergence.prototype);
        obj.__wbg_ptr = ptr;
        ConvergenceFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        ConvergenceFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_convergence_free(ptr, 0);
    }
    /**
     * @returns {Float64Array}
     */
    get im() {
        const ret = wasm.convergence_im(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get limit_im() {
        const ret = wasm.convergence_limit_im(this.__wbg_ptr);
        return ret;
    }
    /**
     * The complete integral, which the series approaches.
     * @returns {number}
     */
    get limit_re() {
        const ret = wasm.convergence_limit_re(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    get re() {
        const ret = wasm.convergence_re(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {number}
     */
    get stationary_phase() {
        const ret = wasm.convergence_stationary_phase(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    get window_fs() {
        const ret = wasm.convergence_window_fs(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) Convergence.prototype[Symbol.dispose] = Convergence.prototype.free;

/**
 * Real part and envelope of a Gaussian packet at one instant.
 */
export class Packet {
    static __wrap(ptr) {
        const obj = Object.create(Packet.prototype);
        obj.__wbg_ptr = ptr;
        PacketFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        PacketFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_packet_free(ptr, 0);
    }
    /**
     * @returns {Float64Array}
     */
    get envelope() {
        const ret = wasm.packet_envelope(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get position_nm() {
        const ret = wasm.packet_position_nm(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get re() {
        const ret = wasm.packet_re(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) Packet.prototype[Symbol.dispose] = Packet.prototype.free;

/**
 * Intuitive and stationary-phase screen patterns, each scaled to a peak of 1.
 */
export class Pattern {
    static __wrap(ptr) {
        const obj = Object.create(Pattern.prototype);
        obj.__wbg_ptr = ptr;
        PatternFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        PatternFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_pattern_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get fringe_nm() {
        const ret = wasm.pattern_fringe_nm(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {Float64Array}
     */
    get intuitive() {
        const ret = wasm.pattern_intuitive(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get screen_nm() {
        const ret = wasm.pattern_screen_nm(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
    /**
     * @returns {Float64Array}
     */
    get stationary() {
        const ret = wasm.pattern_stationary(this.__wbg_ptr);
        var v1 = getArrayF64FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 8, 8);
        return v1;
    }
}
if (Symbol.dispose) Pattern.prototype[Symbol.dispose] = Pattern.prototype.free;

/**
 * Symmetric path with legs `leg_um`. With `align` the duration is nudged so
 * the stationary phase is an odd multiple of pi.
 * @param {number} leg_um
 * @param {number} duration_fs
 * @param {boolean} align
 * @param {number} count
 * @returns {Convergence}
 */
export function convergence_series(leg_um, duration_fs, align, count) {
    const ret = wasm.convergence_series(leg_um, duration_fs, align, count);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Convergence.__wrap(ret[0]);
}

/**
 * Two point slits `separation_nm` apart, the source in line with the upper
 * one, source and screen `distance_um` from the slits. The electron covers
 * the straight source-screen line at `speed_m_per_s`.
 * @param {number} separation_nm
 * @param {number} distance_um
 * @param {number} speed_m_per_s
 * @param {number} fringes
 * @param {number} count
 * @returns {Pattern}
 */
export function near_field_pattern(separation_nm, distance_um, speed_m_per_s, fringes, count) {
    const ret = wasm.near_field_pattern(separation_nm, distance_um, speed_m_per_s, fringes, count);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Pattern.__wrap(ret[0]);
}

/**
 * @param {number} speed_m_per_s
 * @param {number} relative_width
 * @param {number} time_as
 * @param {number} min_nm
 * @param {number} max_nm
 * @param {number} count
 * @returns {Packet}
 */
export function packet_snapshot(speed_m_per_s, relative_width, time_as, min_nm, max_nm, count) {
    const ret = wasm.packet_snapshot(speed_m_per_s, relative_width, time_as, min_nm, max_nm, count);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return Packet.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./matterwave_web_bg.js": import0,
    };
}

const ConvergenceFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_convergence_free(ptr, 1));
const PacketFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_packet_free(ptr, 1));
const PatternFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_pattern_free(ptr, 1));

function getArrayF64FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getFloat64ArrayMemory0().subarray(ptr / 8, ptr / 8 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('matterwave_web_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
