import type { TimeBucket } from './types';

const SVG_NS = 'http://www.w3.org/2000/svg';

const WIDTH = 880;
const PLOT_HEIGHT = 300;
const MARGIN = { top: 24, right: 16, bottom: 40, left: 48 };
const DEPTH = 5; // cosmetic depth offset for the column top faces

export interface ColumnsOptions {
    labels: string[];
    colors: Record<string, string>;
    withToggles?: boolean;
}

export interface ColumnsHandle {
    getVisible(): string[];
    setVisible(label: string, visible: boolean): void;
}

function svgEl(name: string): SVGElement {
    return document.createElementNS(SVG_NS, name);
}

function shade(hex: string, factor: number): string {
    const n = parseInt(hex.slice(1), 16);
    const channel = (shiftBits: number) =>
        Math.max(0, Math.min(255, Math.round(((n >> shiftBits) & 0xff) * factor)));
    const out = (channel(16) << 16) | (channel(8) << 8) | channel(0);
    return `#${out.toString(16).padStart(6, '0')}`;
}

/**
 * Grouped columns per time bucket, one fixed colour per label. Bar heights are
 * an exact integer multiple of the count (the pixel unit is published on the
 * svg as data-unit-px), so the rendered geometry carries the API numbers
 * verbatim. Hiding a label removes its bars without moving anyone else's slot.
 */
export function renderColumns(
    root: HTMLElement,
    buckets: TimeBucket[],
    options: ColumnsOptions,
): ColumnsHandle {
    const visible = new Set(options.labels);

    // the scale ignores visibility so toggling never rescales other series
    const maxCount = buckets.reduce(
        (acc, bucket) =>
            options.labels.reduce((a, label) => Math.max(a, bucket.counts[label] ?? 0), acc),
        0,
    );
    const unitPx = Math.max(1, Math.floor(PLOT_HEIGHT / Math.max(1, maxCount)));

    function draw(): void {
        root.textContent = '';
        root.classList.add('columns-view');

        const legend = document.createElement('div');
        legend.className = 'legend';
        for (const label of options.labels) {
            const item = document.createElement(options.withToggles ? 'label' : 'span');
            item.className = 'legend-item';
            if (options.withToggles) {
                const box = document.createElement('input');
                box.type = 'checkbox';
                box.checked = visible.has(label);
                box.dataset.label = label;
                box.addEventListener('change', () => {
                    handle.setVisible(label, box.checked);
                });
                item.appendChild(box);
            }
            const swatch = document.createElement('span');
            swatch.className = 'swatch';
            swatch.style.background = options.colors[label];
            item.appendChild(swatch);
            item.appendChild(document.createTextNode(label));
            legend.appendChild(item);
        }
        root.appendChild(legend);

        const height = MARGIN.top + PLOT_HEIGHT + MARGIN.bottom;
        const svg = svgEl('svg');
        svg.setAttribute('viewBox', `0 0 ${WIDTH} ${height}`);
        svg.setAttribute('width', String(WIDTH));
        svg.setAttribute('height', String(height));
        svg.classList.add('columns');
        svg.setAttribute('data-unit-px', String(unitPx));

        const baseY = MARGIN.top + PLOT_HEIGHT;
        const plotWidth = WIDTH - MARGIN.left - MARGIN.right;
        const groupWidth = buckets.length > 0 ? plotWidth / buckets.length : plotWidth;
        const slotWidth = (groupWidth - 8) / options.labels.length;
        const barWidth = Math.max(2, slotWidth - 2);

        const gridStep = Math.max(1, Math.ceil(maxCount / 5));
        for (let count = 0; count <= maxCount; count += gridStep) {
            const y = baseY - count * unitPx;
            const line = svgEl('line');
            line.setAttribute('x1', String(MARGIN.left));
            line.setAttribute('x2', String(WIDTH - MARGIN.right));
            line.setAttribute('y1', String(y));
            line.setAttribute('y2', String(y));
            line.setAttribute('class', 'gridline');
            svg.appendChild(line);
            const text = svgEl('text');
            text.setAttribute('x', String(MARGIN.left - 6));
            text.setAttribute('y', String(y + 4));
            text.setAttribute('text-anchor', 'end');
            text.setAttribute('class', 'tick-label');
            text.textContent = String(count);
            svg.appendChild(text);
        }

        const tooltip = document.createElement('div');
        tooltip.className = 'tooltip';
        tooltip.style.display = 'none';

        buckets.forEach((bucket, index) => {
            const groupX = MARGIN.left + index * groupWidth + 4;
            options.labels.forEach((label, slot) => {
                if (!visible.has(label)) return;
                const count = bucket.counts[label] ?? 0;
                const barHeight = count * unitPx;
                const barX = groupX + slot * slotWidth;
                const bar = svgEl('rect');
                bar.setAttribute('x', String(barX));
                bar.setAttribute('y', String(baseY - barHeight));
                bar.setAttribute('width', String(barWidth));
                bar.setAttribute('height', String(barHeight));
                bar.setAttribute('fill', options.colors[label]);
                bar.setAttribute('class', 'column');
                bar.setAttribute('data-label', label);
                bar.setAttribute('data-count', String(count));
                bar.setAttribute('data-bucket', String(bucket.startT));
                bar.addEventListener('mouseenter', () => {
                    tooltip.textContent =
                        `${label}: ${count} in [${bucket.startT}, ${bucket.startT + bucket.width}) s`;
                    tooltip.style.display = 'block';
                });
                bar.addEventListener('mouseleave', () => {
                    tooltip.style.display = 'none';
                });
                svg.appendChild(bar);
                if (count > 0) {
                    const topFace = svgEl('polygon');
                    const y = baseY - barHeight;
                    topFace.setAttribute(
                        'points',
                        `${barX},${y} ${barX + DEPTH},${y - DEPTH} ` +
                            `${barX + barWidth + DEPTH},${y - DEPTH} ${barX + barWidth},${y}`,
                    );
                    topFace.setAttribute('fill', shade(options.colors[label], 1.25));
                    topFace.setAttribute('class', 'column-depth');
                    svg.appendChild(topFace);
                }
            });
            const tick = svgEl('text');
            tick.setAttribute('x', String(groupX + (groupWidth - 8) / 2));
            tick.setAttribute('y', String(baseY + 18));
            tick.setAttribute('text-anchor', 'middle');
            tick.setAttribute('class', 'tick-label');
            tick.textContent = String(bucket.startT);
            svg.appendChild(tick);
        });

        const axisTitle = svgEl('text');
        axisTitle.setAttribute('x', String(MARGIN.left + plotWidth / 2));
        axisTitle.setAttribute('y', String(height - 6));
        axisTitle.setAttribute('text-anchor', 'middle');
        axisTitle.setAttribute('class', 'axis-title');
        axisTitle.textContent = 'time (s, 2-second groups)';
        svg.appendChild(axisTitle);

        root.appendChild(svg);
        root.appendChild(tooltip);
    }

    const handle: ColumnsHandle = {
        getVisible: () => options.labels.filter((label) => visible.has(label)),
        setVisible(label: string, on: boolean): void {
            if (on) visible.add(label);
            else visible.delete(label);
            draw();
        },
    };

    draw();
    return handle;
}
