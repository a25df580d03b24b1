export type Direction = 'UP' | 'DOWN' | 'LEFT' | 'RIGHT';
export type Emotion = 'ANGRY' | 'HAPPY' | 'SAD' | 'SURPRISED';

export interface ScatterPoint {
    t: number;
    direction: Direction;
    intensity: number;
    colorRank: number;
}

export interface ScatterSeries {
    user: string;
    points: ScatterPoint[];
}

export interface TimeBucket {
    startT: number;
    width: number;
    counts: Record<string, number>;
}

export interface SessionEntry {
    user: string;
    date: string;
    kind: 'movement' | 'emotion';
    events: number;
}
