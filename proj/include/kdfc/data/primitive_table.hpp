#pragma once

// Generated by tools/gen_primitive_table.cpp; identical to data/primitive_polys.txt.

namespace kdfc::gf2::data {

inline constexpr const char* kPrimitiveTableText = R"TABLE(# kdfc-primitive-table v1 fnv1a64=ba5993366270842f
2: 2,1,0
3: 3,1,0
4: 4,1,0
5: 5,2,0
6: 6,1,0
7: 7,1,0
8: 8,4,3,2,0
9: 9,4,0
10: 10,3,0
11: 11,2,0
12: 12,6,4,1,0
13: 13,4,3,1,0
14: 14,5,3,1,0
15: 15,1,0
16: 16,5,3,2,0
17: 17,3,0
18: 18,7,0
19: 19,5,2,1,0
20: 20,3,0
21: 21,2,0
22: 22,1,0
23: 23,5,0
24: 24,4,3,1,0
25: 25,3,0
26: 26,6,2,1,0
27: 27,5,2,1,0
28: 28,3,0
29: 29,2,0
30: 30,6,4,1,0
31: 31,3,0
32: 32,7,6,2,0
33: 33,13,0
34: 34,8,4,3,0
35: 35,2,0
36: 36,11,0
37: 37,6,4,1,0
38: 38,6,5,1,0
39: 39,4,0
40: 40,5,4,3,0
41: 41,3,0
42: 42,7,4,3,0
43: 43,6,4,3,0
44: 44,6,5,2,0
45: 45,4,3,1,0
46: 46,8,7,6,0
47: 47,5,0
48: 48,9,7,4,0
49: 49,9,0
50: 50,4,3,2,0
51: 51,6,3,1,0
52: 52,3,0
53: 53,6,2,1,0
54: 54,8,6,3,0
55: 55,24,0
56: 56,7,4,2,0
57: 57,7,0
58: 58,19,0
59: 59,7,4,2,0
60: 60,1,0
61: 61,5,2,1,0
62: 62,6,5,3,0
63: 63,1,0
64: 64,4,3,1,0
65: 65,18,0
66: 66,9,8,6,0
67: 67,5,2,1,0
68: 68,9,0
69: 69,6,5,2,0
70: 70,5,3,1,0
71: 71,6,0
72: 72,10,9,3,0
73: 73,25,0
74: 74,7,4,3,0
75: 75,6,3,1,0
76: 76,5,4,2,0
77: 77,6,5,2,0
78: 78,7,2,1,0
79: 79,9,0
80: 80,9,4,2,0
81: 81,4,0
82: 82,9,6,4,0
83: 83,7,4,2,0
84: 84,13,0
85: 85,8,2,1,0
86: 86,6,5,2,0
87: 87,13,0
88: 88,11,9,8,0
89: 89,38,0
90: 90,5,3,2,0
91: 91,8,5,1,0
92: 92,6,5,2,0
93: 93,2,0
94: 94,21,0
95: 95,11,0
96: 96,10,9,6,0
97: 97,6,0
98: 98,11,0
99: 99,7,5,4,0
100: 100,37,0
101: 101,7,6,1,0
102: 102,6,5,3,0
103: 103,9,0
104: 104,11,10,1,0
105: 105,16,0
106: 106,15,0
107: 107,9,7,4,0
108: 108,31,0
109: 109,5,4,2,0
110: 110,6,4,1,0
111: 111,10,0
112: 112,11,6,4,0
113: 113,9,0
114: 114,11,2,1,0
115: 115,8,7,5,0
116: 116,6,5,2,0
117: 117,5,2,1,0
118: 118,33,0
119: 119,8,0
120: 120,9,6,2,0
121: 121,18,0
122: 122,6,2,1,0
123: 123,2,0
124: 124,37,0
125: 125,7,6,5,0
126: 126,7,4,2,0
127: 127,1,0
128: 128,7,2,1,0
129: 129,5,0
130: 130,3,0
131: 131,8,3,2,0
132: 132,29,0
133: 133,9,8,2,0
134: 134,57,0
135: 135,11,0
136: 136,8,3,2,0
137: 137,21,0
138: 138,8,7,1,0
139: 139,8,5,3,0
140: 140,29,0
141: 141,13,6,1,0
142: 142,21,0
143: 143,5,3,2,0
144: 144,7,4,2,0
145: 145,52,0
146: 146,5,3,2,0
147: 147,11,4,2,0
148: 148,27,0
149: 149,10,9,7,0
150: 150,53,0
151: 151,3,0
152: 152,6,3,2,0
153: 153,1,0
154: 154,9,5,1,0
155: 155,7,5,4,0
156: 156,9,5,3,0
157: 157,6,5,2,0
158: 158,8,6,5,0
159: 159,31,0
160: 160,5,3,2,0
161: 161,18,0
162: 162,8,7,4,0
163: 163,7,6,3,0
164: 164,12,6,5,0
165: 165,9,8,3,0
166: 166,10,3,2,0
167: 167,6,0
168: 168,16,9,6,0
169: 169,34,0
170: 170,23,0
171: 171,6,5,2,0
172: 172,7,0
173: 173,8,5,2,0
174: 174,13,0
175: 175,6,0
176: 176,12,11,9,0
177: 177,8,0
178: 178,87,0
179: 179,4,2,1,0
180: 180,12,10,7,0
181: 181,7,6,1,0
182: 182,8,6,1,0
183: 183,56,0
184: 184,9,8,7,0
185: 185,24,0
186: 186,9,8,6,0
187: 187,7,6,5,0
188: 188,6,5,2,0
189: 189,6,5,2,0
190: 190,13,6,2,0
191: 191,9,0
192: 192,15,11,5,0
193: 193,15,0
194: 194,87,0
195: 195,8,3,2,0
196: 196,11,9,2,0
197: 197,9,4,2,0
198: 198,65,0
199: 199,34,0
200: 200,5,3,2,0
201: 201,14,0
202: 202,55,0
203: 203,8,7,1,0
204: 204,10,4,3,0
205: 205,9,5,2,0
206: 206,10,9,5,0
207: 207,43,0
208: 208,9,3,1,0
209: 209,6,0
210: 210,12,4,3,0
211: 211,11,10,8,0
212: 212,105,0
213: 213,6,5,2,0
214: 214,5,3,1,0
215: 215,23,0
216: 216,7,3,1,0
217: 217,45,0
218: 218,11,0
219: 219,8,4,1,0
220: 220,12,10,9,0
221: 221,8,6,2,0
222: 222,8,5,2,0
223: 223,33,0
224: 224,12,7,2,0
225: 225,32,0
226: 226,10,7,3,0
227: 227,10,9,4,0
228: 228,12,11,2,0
229: 229,10,4,1,0
230: 230,8,7,6,0
231: 231,26,0
232: 232,11,9,4,0
233: 233,74,0
234: 234,31,0
235: 235,9,6,1,0
236: 236,5,0
237: 237,7,4,1,0
238: 238,5,2,1,0
239: 239,36,0
240: 240,8,5,3,0
241: 241,70,0
242: 242,11,6,1,0
243: 243,8,5,1,0
244: 244,9,4,1,0
245: 245,6,4,1,0
246: 246,11,2,1,0
247: 247,82,0
248: 248,15,14,10,0
249: 249,86,0
250: 250,103,0
251: 251,7,4,2,0
252: 252,67,0
253: 253,7,3,2,0
254: 254,7,2,1,0
255: 255,52,0
256: 256,10,5,2,0
257: 257,12,0
258: 258,83,0
259: 259,10,6,2,0
260: 260,10,8,7,0
261: 261,7,6,4,0
262: 262,9,8,4,0
263: 263,93,0
264: 264,10,9,1,0
265: 265,42,0
266: 266,47,0
267: 267,8,6,3,0
268: 268,25,0
269: 269,7,6,1,0
270: 270,53,0
271: 271,58,0
272: 272,9,6,2,0
273: 273,23,0
274: 274,67,0
275: 275,11,10,9,0
276: 276,6,3,1,0
277: 277,12,6,3,0
278: 278,5,0
279: 279,5,0
280: 280,9,5,2,0
281: 281,93,0
282: 282,35,0
283: 283,12,7,5,0
284: 284,119,0
285: 285,10,7,5,0
286: 286,69,0
287: 287,71,0
288: 288,11,10,1,0
289: 289,21,0
290: 290,5,3,2,0
291: 291,12,11,5,0
292: 292,97,0
293: 293,11,6,1,0
294: 294,61,0
295: 295,48,0
296: 296,11,9,4,0
297: 297,5,0
298: 298,11,8,4,0
299: 299,11,6,4,0
300: 300,7,0
301: 301,9,5,2,0
302: 302,41,0
303: 303,13,12,6,0
304: 304,11,2,1,0
305: 305,102,0
306: 306,7,3,1,0
307: 307,8,4,2,0
308: 308,15,9,2,0
309: 309,10,6,4,0
310: 310,8,5,1,0
311: 311,7,5,3,0
312: 312,11,10,5,0
313: 313,79,0
314: 314,15,0
315: 315,10,9,1,0
316: 316,135,0
317: 317,7,4,2,0
318: 318,8,6,5,0
319: 319,36,0
320: 320,4,3,1,0
321: 321,31,0
322: 322,67,0
323: 323,10,3,1,0
324: 324,6,4,3,0
325: 325,10,5,2,0
326: 326,10,3,1,0
327: 327,34,0
328: 328,9,7,5,0
329: 329,50,0
330: 330,8,7,2,0
331: 331,10,6,2,0
332: 332,123,0
333: 333,2,0
334: 334,7,4,1,0
335: 335,10,7,2,0
336: 336,7,4,1,0
337: 337,55,0
338: 338,6,3,2,0
339: 339,16,10,7,0
340: 340,11,4,3,0
341: 341,14,11,5,0
342: 342,125,0
343: 343,75,0
344: 344,11,10,6,0
345: 345,22,0
346: 346,11,7,2,0
347: 347,11,10,3,0
348: 348,8,7,4,0
349: 349,6,5,2,0
350: 350,53,0
351: 351,34,0
352: 352,13,11,6,0
353: 353,69,0
354: 354,14,13,5,0
355: 355,6,5,1,0
356: 356,10,9,7,0
357: 357,11,10,2,0
358: 358,14,8,7,0
359: 359,68,0
360: 360,26,25,1,0
361: 361,7,4,1,0
362: 362,63,0
363: 363,8,5,3,0
364: 364,67,0
365: 365,9,6,5,0
366: 366,29,0
367: 367,21,0
368: 368,17,9,7,0
369: 369,91,0
370: 370,139,0
371: 371,8,3,2,0
372: 372,15,7,3,0
373: 373,8,7,2,0
374: 374,8,6,5,0
375: 375,16,0
376: 376,8,7,5,0
377: 377,41,0
378: 378,43,0
379: 379,10,8,5,0
380: 380,47,0
381: 381,5,2,1,0
382: 382,81,0
383: 383,90,0
384: 384,16,15,6,0
385: 385,6,0
386: 386,83,0
387: 387,9,8,2,0
388: 388,14,3,1,0
389: 389,10,9,5,0
390: 390,89,0
391: 391,28,0
392: 392,13,10,6,0
393: 393,7,0
394: 394,135,0
395: 395,11,6,5,0
396: 396,25,0
397: 397,12,7,6,0
398: 398,14,6,5,0
399: 399,86,0
400: 400,5,3,2,0
401: 401,152,0
402: 402,9,4,3,0
403: 403,9,8,5,0
404: 404,189,0
405: 405,17,8,7,0
406: 406,157,0
407: 407,71,0
408: 408,7,5,1,0
409: 409,87,0
410: 410,10,4,3,0
411: 411,12,10,3,0
412: 412,147,0
413: 413,10,7,6,0
414: 414,16,13,9,0
415: 415,102,0
416: 416,9,5,2,0
417: 417,107,0
418: 418,15,3,1,0
419: 419,15,5,4,0
420: 420,13,10,8,0
421: 421,5,4,2,0
422: 422,149,0
423: 423,25,0
424: 424,9,7,2,0
425: 425,12,0
426: 426,14,12,11,0
427: 427,11,6,5,0
428: 428,105,0
429: 429,10,8,7,0
430: 430,15,13,11,0
431: 431,120,0
432: 432,13,4,3,0
433: 433,33,0
434: 434,12,11,5,0
435: 435,12,9,5,0
436: 436,165,0
437: 437,6,2,1,0
438: 438,65,0
439: 439,49,0
440: 440,4,3,1,0
441: 441,31,0
442: 442,7,5,2,0
443: 443,10,6,1,0
444: 444,13,12,9,0
445: 445,7,6,4,0
446: 446,105,0
447: 447,73,0
448: 448,11,6,4,0
449: 449,134,0
450: 450,79,0
451: 451,16,10,1,0
452: 452,6,5,4,0
453: 453,15,6,4,0
454: 454,10,9,5,0
455: 455,38,0
456: 456,23,11,2,0
457: 457,16,0
458: 458,203,0
459: 459,12,5,2,0
460: 460,61,0
461: 461,7,6,1,0
462: 462,73,0
463: 463,93,0
464: 464,23,9,4,0
465: 465,59,0
466: 466,14,11,6,0
467: 467,11,6,1,0
468: 468,15,9,4,0
469: 469,9,5,2,0
470: 470,149,0
471: 471,1,0
472: 472,11,3,2,0
473: 473,8,6,3,0
474: 474,191,0
475: 475,9,8,4,0
476: 476,15,0
477: 477,16,15,7,0
478: 478,121,0
479: 479,104,0
480: 480,16,13,7,0
481: 481,138,0
482: 482,9,6,5,0
483: 483,9,6,4,0
484: 484,105,0
485: 485,17,16,6,0
486: 486,14,8,5,0
487: 487,94,0
488: 488,4,3,1,0
489: 489,83,0
490: 490,219,0
491: 491,11,6,3,0
492: 492,8,7,1,0
493: 493,10,5,3,0
494: 494,137,0
495: 495,76,0
496: 496,16,5,2,0
497: 497,78,0
498: 498,11,9,3,0
499: 499,11,6,5,0
500: 500,10,6,1,0
501: 501,5,4,2,0
502: 502,8,5,4,0
503: 503,3,0
504: 504,21,14,2,0
505: 505,156,0
506: 506,95,0
507: 507,13,6,3,0
508: 508,109,0
509: 509,8,7,3,0
510: 510,12,10,9,0
511: 511,10,0
512: 512,8,5,2,0
)TABLE";

}  // namespace kdfc::gf2::data
