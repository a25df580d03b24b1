import { intensityColor } from './color';
import type { Direction, ScatterSeries } from './types';

const SVG_NS = 'http://www.w3.org/2000/svg';

const WIDTH = 880;
const ROW_HEIGHT = 38;
const MARGIN = { top: 28, right: 20, bottom: 34, left: 96 };

// Block arrow pointing up; the other directions are rotations of it.
const ARROW_PATH = 'M 0 -7 L 6 1 L 2.4 1 L 2.4 7 L -2.4 7 L -2.4 1 L -6 1 Z';
const ARROW_ANGLE: Record<Direction, number> = { UP: 0, RIGHT: 90, DOWN: 180, LEFT: 270 };

export interface ScatterHandle {
    getWindow(): [number, number];
    setWindow(t0: number, t1: number): void;
    resetWindow(): void;
}

function svgEl(name: string): SVGElement {
    return document.createElementNS(SVG_NS, name);
}

function niceTicks(t0: number, t1: number, target = 8): number[] {
    const span = t1 - t0;
    if (!(span > 0)) return [t0];
    const raw = span / target;
    const power = Math.pow(10, Math.floor(Math.log10(raw)));
    const step = [1, 2, 5, 10].map((m) => m * power).find((s) => span / s <= target) ?? power * 10;
    const ticks: number[] = [];
    for (let t = Math.ceil(t0 / step) * step; t <= t1 + 1e-9; t += step) {
        ticks.push(Number(t.toFixed(6)));
    }
    return ticks;
}

/**
 * Per-user rows of direction glyphs over time. Glyph colour approaches red as
 * the API-provided colorRank approaches 1; hover shows the exact time and
 * intensity; wheel / drag / buttons zoom and pan the time axis.
 */
export function renderScatter(root: HTMLElement, series: ScatterSeries[]): ScatterHandle {
    const users = series.map((s) => s.user);
    const maxT = series.reduce(
        (acc, s) => s.points.reduce((a, p) => Math.max(a, p.t), acc),
        0,
    );
    const fullWindow: [number, number] = [0, maxT > 0 ? maxT * 1.05 : 1];
    let window: [number, number] = [...fullWindow];

    function draw(): void {
        root.textContent = '';
        root.classList.add('scatter-view');

        const toolbar = document.createElement('div');
        toolbar.className = 'toolbar';
        const mkButton = (label: string, title: string, onClick: () => void) => {
            const button = document.createElement('button');
            button.type = 'button';
            button.textContent = label;
            button.title = title;
            button.addEventListener('click', onClick);
            toolbar.appendChild(button);
            return button;
        };
        mkButton('−', 'zoom out', () => zoomBy(1.25, 0.5));
        mkButton('+', 'zoom in', () => zoomBy(0.8, 0.5));
        mkButton('reset', 'show the whole session', () => handle.resetWindow());
        const windowLabel = document.createElement('span');
        windowLabel.className = 'window-label';
        windowLabel.textContent = `showing ${window[0].toFixed(2)}–${window[1].toFixed(2)} s`;
        toolbar.appendChild(windowLabel);
        root.appendChild(toolbar);

        const height = MARGIN.top + Math.max(1, users.length) * ROW_HEIGHT + MARGIN.bottom;
        const plotWidth = WIDTH - MARGIN.left - MARGIN.right;
        const svg = svgEl('svg');
        svg.setAttribute('viewBox', `0 0 ${WIDTH} ${height}`);
        svg.setAttribute('width', String(WIDTH));
        svg.setAttribute('height', String(height));
        svg.classList.add('scatter');

        const [t0, t1] = window;
        const x = (t: number) => MARGIN.left + ((t - t0) / (t1 - t0)) * plotWidth;

        for (const tick of niceTicks(t0, t1)) {
            const gx = x(tick);
            const line = svgEl('line');
            line.setAttribute('x1', String(gx));
            line.setAttribute('x2', String(gx));
            line.setAttribute('y1', String(MARGIN.top - 8));
            line.setAttribute('y2', String(height - MARGIN.bottom));
            line.setAttribute('class', 'gridline');
            svg.appendChild(line);
            const text = svgEl('text');
            text.setAttribute('x', String(gx));
            text.setAttribute('y', String(height - MARGIN.bottom + 16));
            text.setAttribute('text-anchor', 'middle');
            text.setAttribute('class', 'tick-label');
            text.textContent = String(tick);
            svg.appendChild(text);
        }
        const axisTitle = svgEl('text');
        axisTitle.setAttribute('x', String(MARGIN.left + plotWidth / 2));
        axisTitle.setAttribute('y', String(height - 6));
        axisTitle.setAttribute('text-anchor', 'middle');
        axisTitle.setAttribute('class', 'axis-title');
        axisTitle.textContent = 'time (s)';
        svg.appendChild(axisTitle);

        const tooltip = document.createElement('div');
        tooltip.className = 'tooltip';
        tooltip.style.display = 'none';

        series.forEach((userSeries, row) => {
            const yMid = MARGIN.top + row * ROW_HEIGHT + ROW_HEIGHT / 2;
            const label = svgEl('text');
            label.setAttribute('x', String(MARGIN.left - 10));
            label.setAttribute('y', String(yMid + 4));
            label.setAttribute('text-anchor', 'end');
            label.setAttribute('class', 'user-label');
            label.textContent = userSeries.user;
            svg.appendChild(label);

            const baseline = svgEl('line');
            baseline.setAttribute('x1', String(MARGIN.left));
            baseline.setAttribute('x2', String(WIDTH - MARGIN.right));
            baseline.setAttribute('y1', String(yMid));
            baseline.setAttribute('y2', String(yMid));
            baseline.setAttribute('class', 'row-line');
            svg.appendChild(baseline);

            for (const point of userSeries.points) {
                if (point.t < t0 || point.t > t1) continue;
                const glyph = svgEl('path');
                glyph.setAttribute('d', ARROW_PATH);
                glyph.setAttribute(
                    'transform',
                    `translate(${x(point.t)},${yMid}) rotate(${ARROW_ANGLE[point.direction]})`,
                );
                glyph.setAttribute('fill', intensityColor(point.colorRank));
                glyph.setAttribute('class', 'glyph');
                glyph.setAttribute('data-user', userSeries.user);
                glyph.setAttribute('data-t', String(point.t));
                glyph.setAttribute('data-direction', point.direction);
                glyph.setAttribute('data-intensity', String(point.intensity));
                glyph.setAttribute('data-color-rank', String(point.colorRank));
                glyph.addEventListener('mouseenter', () => {
                    tooltip.textContent =
                        `${userSeries.user} · ${point.direction} · ` +
                        `time ${point.t} s · intensity ${point.intensity}°`;
                    tooltip.style.display = 'block';
                });
                glyph.addEventListener('mouseleave', () => {
                    tooltip.style.display = 'none';
                });
                svg.appendChild(glyph);
            }
        });

        // wheel zoom around the cursor, drag to pan
        svg.addEventListener('wheel', (event: WheelEvent) => {
            event.preventDefault();
            const rect = svg.getBoundingClientRect();
            const frac = rect.width > 0
                ? Math.min(1, Math.max(0, (event.clientX - rect.left - MARGIN.left) / plotWidth))
                : 0.5;
            zoomBy(event.deltaY > 0 ? 1.25 : 0.8, frac);
        });
        let dragStartX: number | null = null;
        let dragStartWindow: [number, number] = window;
        svg.addEventListener('pointerdown', (event: PointerEvent) => {
            dragStartX = event.clientX;
            dragStartWindow = [...window];
        });
        svg.addEventListener('pointermove', (event: PointerEvent) => {
            if (dragStartX === null) return;
            const span = dragStartWindow[1] - dragStartWindow[0];
            const shift = (-(event.clientX - dragStartX) / plotWidth) * span;
            handle.setWindow(dragStartWindow[0] + shift, dragStartWindow[1] + shift);
        });
        const endDrag = () => {
            dragStartX = null;
        };
        svg.addEventListener('pointerup', endDrag);
        svg.addEventListener('pointerleave', endDrag);
        svg.addEventListener('dblclick', () => handle.resetWindow());

        root.appendChild(svg);
        root.appendChild(tooltip);

        const legend = document.createElement('div');
        legend.className = 'legend';
        legend.textContent =
            'arrows show movement direction; colour shifts toward red as intensity grows';
        root.appendChild(legend);
    }

    function zoomBy(factor: number, focusFrac: number): void {
        const [t0, t1] = window;
        const span = (t1 - t0) * factor;
        const focus = t0 + (t1 - t0) * focusFrac;
        handle.setWindow(focus - span * focusFrac, focus + span * (1 - focusFrac));
    }

    const handle: ScatterHandle = {
        getWindow: () => [...window] as [number, number],
        setWindow(t0: number, t1: number): void {
            const span = Math.max(1e-6, t1 - t0);
            let start = t0;
            if (start < 0) start = 0;
            if (start + span > fullWindow[1]) start = Math.max(0, fullWindow[1] - span);
            window = [start, Math.min(fullWindow[1], start + span)];
            draw();
        },
        resetWindow(): void {
            window = [...fullWindow];
            draw();
        },
    };

    draw();
    return handle;
}
