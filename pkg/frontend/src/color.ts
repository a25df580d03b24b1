import type { Direction, Emotion } from './types';

// Fixed palettes; the legends name them so the mapping is explicit.
export const DIRECTION_COLORS: Record<Direction, string> = {
    UP: '#1f77b4',
    DOWN: '#2ca02c',
    LEFT: '#9467bd',
    RIGHT: '#ff7f0e',
};

export const EMOTION_COLORS: Record<Emotion, string> = {
    ANGRY: '#c0392b',
    HAPPY: '#e6b800',
    SAD: '#2980b9',
    SURPRISED: '#8e44ad',
};

const COOL = [69, 117, 180]; // #4575b4
const RED = [215, 48, 39]; // #d73027

/** Linear blend from a cool blue toward red as the rank goes 0 -> 1. */
export function intensityColor(colorRank: number): string {
    const rank = Math.min(1, Math.max(0, colorRank));
    const channel = (i: number) => Math.round(COOL[i] + (RED[i] - COOL[i]) * rank);
    const hex = (v: number) => v.toString(16).padStart(2, '0');
    return `#${hex(channel(0))}${hex(channel(1))}${hex(channel(2))}`;
}
